import argparse

from ..utils.config import Config
from . import commands


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=Config.OUTPUT_FORMATS, default="text", help="output format")
    parser.add_argument("--verbose", "-v", action="store_true", help="log progress to stderr")


def _engine(parser: argparse.ArgumentParser):
    parser.add_argument("--engine", choices=Config.ENGINE_NAMES, default="auto", help="permanent engine")
    parser.add_argument("--threads", type=_positive, default=None,
                        help="worker threads for the ryser engine (default: hardware parallelism)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithperm",
        description="Count permutations of [n] under lcm, divisibility and coprimality constraints, "
                    "and compute the constants of their growth bounds.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    count = subparsers.add_parser("count", help="exact count for one kind and n")
    count.add_argument("--kind", choices=Config.KIND_NAMES, default="lcm")
    count.add_argument("--n", type=_positive, required=True)
    _engine(count)
    _common(count)
    count.set_defaults(func=commands.cmd_count)

    table1 = subparsers.add_parser("table1", help="divisibility and lcm counts for n = 1..max-n")
    table1.add_argument("--max-n", type=_positive, default=Config.FAST_TIER_MAX_N)
    table1.add_argument("--slow", action="store_true", help=f"allow max-n above {Config.SLOW_TIER_MAX_N}")
    _engine(table1)
    _common(table1)
    table1.set_defaults(func=commands.cmd_table1)

    table2 = subparsers.add_parser("table2", help="lower-bound constants c(b)alpha(b) and c_d(b)alpha(b)")
    table2.add_argument("--b", type=_positive, nargs="+", required=True)
    table2.add_argument("--slow", action="store_true", help=f"allow b with tau(b) >= {Config.SLOW_TABLE2_TAU}")
    _common(table2)
    table2.set_defaults(func=commands.cmd_table2)

    upper = subparsers.add_parser("upper", help="upper-bound exponents for a cut parameter k")
    upper.add_argument("--k", type=_positive, default=Config.DEFAULT_K)
    upper.add_argument("--empirical-n", type=_positive, default=None,
                       help=f"also compute the empirical top-interval exponent at this n (e.g. {Config.EMPIRICAL_N})")
    _common(upper)
    upper.set_defaults(func=commands.cmd_upper)

    construct = subparsers.add_parser("construct", help="block family witnessing the lcm lower bound")
    construct.add_argument("--b", type=_positive, required=True)
    construct.add_argument("--n", type=_positive, required=True)
    construct.add_argument("--limit", type=_positive, default=8, help="members to emit")
    construct.add_argument("--verify", action="store_true", help="check every emitted member")
    construct.add_argument("--odd-pairs", action="store_true", help="use the b = 2 family with odd generators")
    _common(construct)
    construct.set_defaults(func=commands.cmd_construct)

    verify = subparsers.add_parser("verify", help="recompute every published value")
    verify.add_argument("--slow", action="store_true",
                        help=f"extend to n <= {Config.SLOW_TIER_MAX_N} and b with tau(b) >= {Config.SLOW_TABLE2_TAU}")
    verify.add_argument("--nightly", action="store_true",
                        help=f"the slow tier plus count-table rows up to n = {Config.NIGHTLY_TIER_MAX_N}")
    verify.add_argument("--empirical-n", type=_positive, default=None)
    _engine(verify)
    _common(verify)
    verify.set_defaults(func=commands.cmd_verify)

    ratio = subparsers.add_parser("ratio", help="#S_lcm(n)/#S_div(n) profile and its growth constants")
    ratio.add_argument("--max-n", type=_positive, default=12)
    _engine(ratio)
    _common(ratio)
    ratio.set_defaults(func=commands.cmd_ratio)

    anticoprime = subparsers.add_parser("anticoprime", help="anti-coprime counts A(n)")
    anticoprime.add_argument("--max-n", type=_positive, default=16)
    _engine(anticoprime)
    _common(anticoprime)
    anticoprime.set_defaults(func=commands.cmd_anticoprime)

    return parser
