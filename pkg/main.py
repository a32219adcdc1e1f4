#!/usr/bin/env python3
"""
ExtWords - word problems in Ext(A,G) over non-Archimedean words
Main application entry point: stdin script mode or interactive shell
"""

import argparse
import logging
import sys
from typing import List, Optional

from shell.commands import CommandRunner, HELP, render_result
from shell.demos import DEMOS
from shell.session import Session
from utils.config_loader import ConfigLoader
from utils.errors import ExtWordsError, CapExceededError
from utils.limits import configure

try:
    from prompt_toolkit import PromptSession
    from prompt_toolkit.completion import WordCompleter
    PROMPT_TOOLKIT_AVAILABLE = True
except ImportError:
    PROMPT_TOOLKIT_AVAILABLE = False

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CAP = 3


def exit_code(error: ExtWordsError) -> int:
    return EXIT_CAP if isinstance(error, CapExceededError) else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Word problem solver for Ext(A,G)")
    parser.add_argument('--config', help="path to an extwords_config.json")
    parser.add_argument('--group', help="base group: free:a,b, abelian:k, cyclic or table:FILE")
    parser.add_argument('--dmax', type=int, help="maximal exponent degree")
    parser.add_argument('--seed', type=int, help="seed for randomized traces")
    parser.add_argument('--max-steps', type=int, dest='max_steps', help="rewriting step cap")
    parser.add_argument('--window', type=int, help="window and search cap")
    parser.add_argument('--json', action='store_true', help="one JSON object per command")
    parser.add_argument('--verbose', action='store_true', help="debug logging")
    parser.add_argument('--quiet', action='store_true', help="warnings and errors only")
    return parser


def setup(args: argparse.Namespace) -> Session:
    """Overlay flags on the config file and open a session"""
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)

    engine = ConfigLoader.get_engine_config(args.config)
    for key, value in (('d_max', args.dmax), ('seed', args.seed),
                       ('max_steps', args.max_steps), ('window', args.window)):
        if value is not None:
            engine[key] = value
    configure(engine)

    shell = ConfigLoader.get_shell_config(args.config)
    if args.group:
        shell['group'] = args.group
    if args.json:
        shell['json'] = True
    return Session(shell)


def run_script(runner: CommandRunner, lines, as_json: bool) -> int:
    """Run commands line by line, stopping at the first error"""
    for number, line in enumerate(lines, 1):
        try:
            result = runner.run(line)
        except ExtWordsError as e:
            logger.error(f"line {number}: {e}")
            return exit_code(e)
        if result is not None:
            print(render_result(result, as_json))
    return EXIT_OK


def _read_line(prompt_session, prompt: str, names: List[str]) -> str:
    if prompt_session is not None:
        return prompt_session.prompt(prompt, completer=WordCompleter(names))
    return input(prompt)


def run_repl(runner: CommandRunner, prompt: str, as_json: bool) -> int:
    """Interactive loop; errors are reported and the loop continues"""
    print("ExtWords shell. Type help for commands, Ctrl-D to quit.")
    prompt_session = PromptSession() if PROMPT_TOOLKIT_AVAILABLE else None
    while True:
        names = list(HELP) + list(DEMOS) + list(runner.session.bindings)
        try:
            line = _read_line(prompt_session, prompt, names)
        except (EOFError, KeyboardInterrupt):
            print()
            return EXIT_OK
        if line.strip() in ('quit', 'exit'):
            return EXIT_OK
        try:
            result = runner.run(line)
        except ExtWordsError as e:
            print(f"error: {e}")
            continue
        if result is not None:
            print(render_result(result, as_json))


def main(argv: Optional[List[str]] = None) -> int:
    """Initialize the engine and run commands"""
    args = build_parser().parse_args(argv)

    try:
        session = setup(args)
        runner = CommandRunner(session)
        logger.info(f"ExtWords ready over {session.oracle.name}")

        if sys.stdin.isatty():
            return run_repl(runner, session.config['prompt'], session.json_output)
        return run_script(runner, sys.stdin, session.json_output)

    except ExtWordsError as e:
        logger.error(f"ExtWords failed: {e}")
        return exit_code(e)
    except Exception as e:
        logger.error(f"Failed to run ExtWords: {e}")
        raise


if __name__ == "__main__":
    sys.exit(main())
