#!/usr/bin/env python3
"""
ExtWords Demo
Runs every named example and a short shell session over F(a,b)
"""

import logging

from shell.commands import CommandRunner, render_result
from shell.demos import DEMOS, run_demo
from shell.session import Session
from utils.errors import ExtWordsError

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

logger = logging.getLogger(__name__)

SHELL_SCRIPT = [
    "let t = raypair(a; b)",
    "eq a t; t b",
    "deg t a ~t",
    "rdeg t b ~t",
    "periods raypair(a; ab) raypair(ab; b)",
    "order wm(3) --max 4",
    "cdr wm(0) b wm(0)",
    "check atom(ab; ~b~a)",
]


def demo_examples():
    """Run the named example corpus"""
    print("=" * 60)
    print("ExtWords NAMED EXAMPLES")
    print("=" * 60)

    failures = 0
    for name in DEMOS:
        print(f"\n{name}")
        print("-" * 40)
        try:
            for label, value in run_demo(name):
                print(f"   {label}: {value}")
        except ExtWordsError as e:
            failures += 1
            print(f"   error: {e}")
    return failures


def demo_shell():
    """Drive the command layer the way a script would"""
    print("\n" + "=" * 60)
    print("ExtWords SHELL SESSION")
    print("=" * 60)

    runner = CommandRunner(Session())
    for line in SHELL_SCRIPT:
        print(f"\next> {line}")
        try:
            result = runner.run(line)
        except ExtWordsError as e:
            print(f"error: {e}")
            continue
        if result is not None:
            print(render_result(result))


def main():
    """Run the complete demonstration"""
    logger.info("Starting ExtWords demonstration")
    failures = demo_examples()
    demo_shell()
    print("\n" + "=" * 60)
    print(f"Examples run: {len(DEMOS)}, errors: {failures}")
    print("=" * 60)


if __name__ == "__main__":
    main()
