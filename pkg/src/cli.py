"""
Command-line front end.

Reports go to standard output, diagnostics to standard error. Exit codes:
0 success, 1 input error, 2 no dominating matching for the Scarf output,
3 an enumeration bound was exceeded.
"""

import argparse
import sys
from typing import List, Optional

from colorama import Fore, Style
from dotenv import load_dotenv
from pydantic import BaseModel

from .config import SolverConfigManager, default_preference
from .errors import InternalInconsistencyError, MarketFileError, MatchingError, PivotError, ResourceBoundError
from .schedule import unit_scheme
from .services import ServiceManager
from .structure_outputs import ShareEntry
from .tools.market_file import load_market_file, parse_matching, parse_shares

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_DOMINATED = 2
EXIT_BOUND = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concave-matching",
        description="Stable many-to-one matchings with contracts via Scarf's algorithm.",
    )
    parser.add_argument("--config", help="Solver configuration YAML file")
    parser.add_argument("--profile", help="Configuration preference (default: $MATCHING_SOLVER_PROFILE or 'default')")
    parser.add_argument("--json", action="store_true", help="Print reports as JSON")
    parser.add_argument("--verbose", action="store_true", help="Print pivot progress to standard error")
    parser.add_argument("--row", help="Agent whose row starts the ordinal basis")
    parser.add_argument("--reverse-l", action="store_true", help="Use the reversed ordering of the large utility entries")

    commands = parser.add_subparsers(dest="command", required=True)
    solve = commands.add_parser("solve", help="Stable schedule matching and a dominating stable matching")
    solve.add_argument("file")
    check_stable = commands.add_parser("check-stable", help="Check a full-time matching for blocks")
    check_stable.add_argument("file")
    check_stable.add_argument("matching", help='e.g. "{z1,z2}", "z1,z2" or "empty"')
    check_concave = commands.add_parser("check-concave", help="Decide concavity over support patterns")
    check_concave.add_argument("file")
    check_concave.add_argument("--pi", action="store_true", help="Use the file's scheme instead of the unit scheme")
    da = commands.add_parser("da", help="Leader-proposing deferred acceptance on a team market")
    da.add_argument("file")
    trace = commands.add_parser("trace", help="Print every pivot of Scarf's algorithm")
    trace.add_argument("file")
    stable_set = commands.add_parser("stable-set", help="All stable matchings by exhaustive search")
    stable_set.add_argument("file")
    check_schedule = commands.add_parser("check-schedule", help="Check a schedule matching for blocks")
    check_schedule.add_argument("file")
    check_schedule.add_argument("shares", help='e.g. "{x5c}=1/2 {z1,z2}=1"')
    round_cmd = commands.add_parser("round", help="Round a team-market schedule matching to a matching")
    round_cmd.add_argument("file")
    round_cmd.add_argument("shares", help='e.g. "{a,b}=1/2 {c,d}=1/2"')
    return parser


def _say(line: str, color: Optional[str] = None, use_color: bool = True):
    print((color + line + Style.RESET_ALL) if color and use_color else line)


def _error(message: str):
    print(Fore.RED + message + Style.RESET_ALL, file=sys.stderr)


def _verdict(name: str, value: bool, use_color: bool):
    _say(f"{name}: {'yes' if value else 'no'}", Fore.GREEN if value else Fore.RED, use_color)


def _shares(entries: List[ShareEntry]):
    for entry in entries:
        print(f"  t({entry.assignment}) = {entry.share}    [{entry.firm}]")


def _emit_json(report: BaseModel):
    print(report.model_dump_json(indent=2))


def _run(args, manager: ServiceManager) -> int:
    market, scheme, structure = load_market_file(args.file)
    color = not args.json

    if args.command == "solve":
        report = manager.get_scarf_service().solve(market, scheme)
        if args.json:
            _emit_json(report)
        else:
            if report.fallback:
                _say("no Scarf start exists; stable matching taken from exhaustive search", Fore.YELLOW)
            else:
                print(f"stable schedule matching ({report.pivots} pivots):")
                _shares(report.schedule)
                print("full matched: " + (" ".join(report.full_matched) or "none"))
            if report.matching is not None:
                print(f"matching: {report.matching}")
                _verdict("stable", report.stable, color)
        if report.matching is None:
            _error("no full-time matching dominates the Scarf output; the market is not concave under this scheme")
            return EXIT_NOT_DOMINATED
        return EXIT_OK

    if args.command == "trace":
        report = manager.get_scarf_service().trace(market, scheme)
        if args.json:
            _emit_json(report)
        else:
            for line in report.lines:
                print(line)
            print("b = (" + ",".join(report.solution) + ")")
            _shares(report.schedule)
        return EXIT_OK

    if args.command == "check-schedule":
        report = manager.get_scarf_service().check_schedule(market, scheme, parse_shares(market, args.shares))
        if args.json:
            _emit_json(report)
        else:
            _verdict("feasible", report.feasible, color)
            if report.feasible:
                print("full matched: " + (" ".join(report.full_matched) or "none"))
                for entry in report.profile:
                    print(f"  worst({entry.agent}) = {entry.worst}")
                _verdict("stable", report.stable, color)
                if report.block is not None:
                    print(f"blocked by {report.block}")
        return EXIT_OK

    if args.command == "check-stable":
        report = manager.get_stability_service().check_matching(market, parse_matching(market, args.matching))
        if args.json:
            _emit_json(report)
        else:
            print(f"matching: {report.matching}")
            _verdict("stable", report.stable, color)
            if report.block is not None:
                print(f"blocked by {report.block}")
        return EXIT_OK

    if args.command == "stable-set":
        report = manager.get_stability_service().stable_set(market)
        if args.json:
            _emit_json(report)
        else:
            for matching in report.matchings:
                print(matching)
            print(f"{len(report.matchings)} stable of {report.enumerated} matchings")
        return EXIT_OK

    if args.command == "check-concave":
        service = manager.get_concavity_service()
        if args.pi:
            report = service.check(market, scheme, "file")
        else:
            report = service.check(market, unit_scheme(market), "unit")
        if args.json:
            _emit_json(report)
        else:
            _verdict("concave", report.concave, color)
            if not report.concave:
                print("support: " + " ".join(report.support))
                print("full matched: " + (" ".join(report.tight) or "none"))
                print("witness:")
                _shares(report.witness)
        return EXIT_OK

    if structure is None:
        raise MarketFileError(f"{args.file} has no leaders or follows lines")
    service = manager.get_team_service()
    if args.command == "da":
        report = service.deferred_acceptance(market, structure)
    else:
        report = service.round_schedule(market, structure, parse_shares(market, args.shares))
    if args.json:
        _emit_json(report)
    else:
        print(f"matching: {report.matching}")
        if report.dominates is not None:
            _verdict("dominates", report.dominates, color)
        _verdict("stable", report.stable, color)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config_manager = SolverConfigManager(args.config)
        manager = ServiceManager(config_manager, args.profile or default_preference())
        manager.configure_scarf(
            initial_row=args.row,
            l_order="reversed" if args.reverse_l else None,
            verbose=True if args.verbose else None,
        )
        return _run(args, manager)
    except ResourceBoundError as e:
        _error(f"Resource bound exceeded: {e}")
        return EXIT_BOUND
    except (InternalInconsistencyError, PivotError) as e:
        _error(f"Internal error: {e}")
        return EXIT_INPUT
    except (MatchingError, ValueError) as e:
        _error(f"Error: {e}")
        return EXIT_INPUT


def run():
    load_dotenv()
    sys.exit(main())
