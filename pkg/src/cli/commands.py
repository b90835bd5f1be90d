"""Command handlers. Each takes the parsed arguments and returns (record, exit code)."""

import time
from typing import Tuple

from ..models.compat import CompatKind
from ..models.output import OutputRecord
from ..services import bounds, constructions, permanent
from ..services.numtheory import tau
from ..services.verification import run_verification
from ..utils.config import Config
from ..utils.errors import ResourceLimitError
from ..utils.logger import get_logger

logger = get_logger("cli")

EXIT_OK = 0
EXIT_MISMATCH = 1


def _threads(args) -> int:
    return args.threads or Config.thread_count()


def cmd_count(args) -> Tuple[OutputRecord, int]:
    """Exact count for one kind and n"""
    kind = CompatKind.from_name(args.kind)
    logger.info(f"Counting {kind.value} permutations of [{args.n}] with engine {args.engine}")
    result = permanent.count_permutations(kind, args.n, args.engine, args.threads)
    record = OutputRecord(
        command="count",
        parameters={"kind": kind.value, "n": args.n},
        rows=[result.to_dict()],
        engine=result.engine,
        threads=_threads(args),
        elapsed=result.elapsed,
        lines=[f"#S_{kind.value}({args.n}) = {result.count}  (n-th root {result.nth_root:.4f})"],
    )
    return record, EXIT_OK


def cmd_table1(args) -> Tuple[OutputRecord, int]:
    if args.max_n > Config.SLOW_TIER_MAX_N and not args.slow:
        raise ResourceLimitError(f"max-n above {Config.SLOW_TIER_MAX_N} needs --slow")
    started = time.perf_counter()
    record = OutputRecord(command="table1", parameters={"max_n": args.max_n},
                          engine=args.engine, threads=_threads(args))
    for div, lcm in permanent.table1(args.max_n, args.engine, args.threads):
        record.rows.append({
            "n": div.n,
            "div": str(div.count),
            "div_root": f"{div.nth_root:.4f}",
            "lcm": str(lcm.count),
            "lcm_root": f"{lcm.nth_root:.4f}",
        })
        record.lines.append(f"{div.n:>3}  {div.count:>16}  {div.nth_root:.4f}  {lcm.count:>16}  {lcm.nth_root:.4f}")
    record.elapsed = time.perf_counter() - started
    return record, EXIT_OK


def cmd_table2(args) -> Tuple[OutputRecord, int]:
    started = time.perf_counter()
    record = OutputRecord(command="table2", parameters={"b": list(args.b)})
    for b in args.b:
        if tau(b) >= Config.SLOW_TABLE2_TAU and not args.slow:
            raise ResourceLimitError(f"b = {b} has tau(b) = {tau(b)} and needs --slow")
        report = bounds.lower_bound_report(b)
        record.rows.append(report.to_dict())
        record.lines.append(report.table_row() if len(args.b) == 1 else f"{b}: {report.table_row()}")
    record.elapsed = time.perf_counter() - started
    return record, EXIT_OK


def cmd_upper(args) -> Tuple[OutputRecord, int]:
    started = time.perf_counter()
    report = bounds.upper_bound_report(args.k, empirical_n=args.empirical_n)
    data = report.to_dict()
    record = OutputRecord(command="upper", parameters={"k": args.k, "empirical_n": args.empirical_n},
                          rows=[data], elapsed=time.perf_counter() - started)
    record.lines = [f"{key:<18} {value}" for key, value in data.items()]
    return record, EXIT_OK


def cmd_construct(args) -> Tuple[OutputRecord, int]:
    started = time.perf_counter()
    if args.odd_pairs:
        family = constructions.odd_pair_family(args.n)
    else:
        family = constructions.build_family(args.b, args.n)
    total = constructions.family_count(family)
    members = constructions.emit_members(family, args.limit)

    summary = {
        "b": family.b,
        "n": family.n,
        "blocks": len(family.blocks),
        "covered": family.covered,
        "family_count": str(total),
        "per_interval_counts": {str(i): c for i, c in sorted(family.per_interval_counts.items())},
        "members": len(members),
    }
    code = EXIT_OK
    if args.verify:
        verified = sum(1 for image in members if constructions.verify_member(image))
        summary["verified"] = verified
        if verified != len(members) or len(set(members)) != len(members):
            code = EXIT_MISMATCH

    record = OutputRecord(command="construct", parameters={"b": family.b, "n": family.n, "limit": args.limit},
                          rows=[summary], elapsed=time.perf_counter() - started)
    record.lines.append(f"b={family.b} n={family.n}: {len(family.blocks)} blocks, family count {total}")
    for block in family.blocks:
        record.lines.append(f"  T({block.interval},{block.generator}) = {list(block.elements)}")
    for image in members:
        record.lines.append("  " + " ".join(str(v) for v in image))
    if args.verify:
        record.lines.append(f"verified {summary['verified']} of {len(members)} members")
    return record, code


def cmd_verify(args) -> Tuple[OutputRecord, int]:
    started = time.perf_counter()
    results = run_verification(slow=args.slow, engine=args.engine, threads=args.threads,
                               empirical_n=args.empirical_n, nightly=args.nightly)
    record = OutputRecord(command="verify", parameters={"slow": args.slow, "nightly": args.nightly},
                          rows=[r.to_dict() for r in results], engine=args.engine, threads=_threads(args),
                          elapsed=time.perf_counter() - started)
    failed = [r for r in results if r.status == "FAIL"]
    record.lines = [f"{r.status}  {r.name}  {r.actual or '-'}" for r in results]
    for r in failed:
        record.lines.append(f"- {r.name}: expected {r.expected}")
        record.lines.append(f"+ {r.name}: got      {r.actual}")
    record.lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed or skipped")
    return record, EXIT_MISMATCH if failed else EXIT_OK


def cmd_ratio(args) -> Tuple[OutputRecord, int]:
    started = time.perf_counter()
    constants = bounds.ratio_constants()
    record = OutputRecord(command="ratio", parameters={"max_n": args.max_n},
                          engine=args.engine, threads=_threads(args))
    for row in permanent.ratio_profile(args.max_n, args.engine, args.threads):
        ratio = row["ratio"]
        record.rows.append({
            "n": row["n"],
            "div": str(row["div"]),
            "lcm": str(row["lcm"]),
            "ratio": f"{ratio.numerator}/{ratio.denominator}",
            "ratio_root": f"{row['root']:.4f}",
        })
        record.lines.append(f"{row['n']:>3}  R = {float(ratio):.6f}  R^(1/n) = {row['root']:.4f}")
    record.rows.append(constants.to_dict())
    record.lines.append(" ".join(f"{key}={value}" for key, value in constants.to_dict().items()))
    record.elapsed = time.perf_counter() - started
    return record, EXIT_OK


def cmd_anticoprime(args) -> Tuple[OutputRecord, int]:
    started = time.perf_counter()
    record = OutputRecord(command="anticoprime", parameters={"max_n": args.max_n},
                          engine=args.engine, threads=_threads(args))
    for n in range(1, args.max_n + 1):
        count = permanent.anticoprime_count(n, args.engine, args.threads)
        record.rows.append({"n": n, "count": str(count)})
        record.lines.append(f"A({n}) = {count}")
    record.elapsed = time.perf_counter() - started
    return record, EXIT_OK
