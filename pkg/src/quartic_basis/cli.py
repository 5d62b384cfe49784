"""quartic-basis: integral bases of X^4 + aX + b from the command line."""
from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Optional, Sequence

from pydantic import BaseModel

from quartic_basis.config import QuarticBasisSettings, get_settings
from quartic_basis.globalize import integral_basis
from quartic_basis.integrality import is_p_integral
from quartic_basis.newton import ind_N, is_p_regular, index_lower_bound, phi_polygon, render_polygon
from quartic_basis.oracle import contains, p_maximal_order
from quartic_basis.polyring import factor_integer, factor_shape_mod_p, vp_int
from quartic_basis.reports import (
    CheckMismatch,
    CheckReport,
    DiscReport,
    ErrorReport,
    GlobalBasisReport,
    JobSpecError,
    PBasisReport,
    PhiPolygonReport,
    PolygonReport,
    parse_job,
)
from quartic_basis.trinomial import (
    FactorizationIncompleteError,
    ReducibleError,
    TableMismatchError,
    TrinomialField,
    UnnormalizedInputError,
    local_basis,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REDUCIBLE = 2
EXIT_CONTRACT = 3
EXIT_INCOMPLETE = 4

Outcome = tuple[BaseModel, str, int]


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError as exc:
        raise JobSpecError(f"not a range LO:HI: {text!r}") from exc
    if stop < start:
        raise JobSpecError(f"empty range {text!r}")
    return range(start, stop + 1)


def _require_p(p: Optional[int]) -> int:
    if p is None:
        raise JobSpecError("--p is required")
    return p


def _read_document(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def _verify_document(args: argparse.Namespace, field: TrinomialField, p: int) -> Outcome:
    """Re-validate a basis document printed by an earlier pbasis run."""
    supplied = PBasisReport.model_validate_json(_read_document(args.basis))
    if int(supplied.p) != p:
        raise JobSpecError(f"document is for p={supplied.p}, not p={p}")
    elements = supplied.to_elements(field.polynomial)
    order, oracle_index = p_maximal_order(field.polynomial, p)
    vp_index = sum(element.denom_exp for element in supplied.basis)
    verified = (
        supplied.is_triangular()
        and vp_index == oracle_index
        and all(is_p_integral(w) for w in elements)
        and all(contains(order, w) for w in elements)
    )
    logger.info("verified document p=%s case=%s verified=%s", p, supplied.case, verified)
    vp_disc = vp_int(field.discriminant, p)
    report = supplied.model_copy(
        update={
            "vp_disc": vp_disc,
            "vp_index": vp_index,
            "vp_dK": vp_disc - 2 * vp_index,
            "verified": verified,
            "oracle_vp_index": oracle_index,
        }
    )
    return report, _pbasis_text(report), EXIT_OK if verified else EXIT_CONTRACT


def cmd_pbasis(args: argparse.Namespace, settings: QuarticBasisSettings) -> Outcome:
    job = parse_job(a=args.a, b=args.b, p=args.p, verify=args.verify)
    p = _require_p(job.p)
    field = TrinomialField(job.a, job.b)
    if args.basis is not None:
        return _verify_document(args, field, p)
    try:
        basis = local_basis(field, p, max_shift_iterations=settings.max_shift_iterations)
    except TableMismatchError as exc:
        logger.warning("falling back to the oracle a=%s b=%s p=%s reason=%s", job.a, job.b, p, exc)
        order, _ = p_maximal_order(field.polynomial, p)
        report = PBasisReport.from_order(order, vp_int(field.discriminant, p))
        return report, _pbasis_text(report), EXIT_CONTRACT
    elements = basis.to_elements()
    verified = all(is_p_integral(w) for w in elements)
    oracle_index = None
    if job.verify:
        order, oracle_index = p_maximal_order(field.polynomial, p)
        verified = verified and oracle_index == basis.vp_index and all(contains(order, w) for w in elements)
    report = PBasisReport.from_basis(basis, verified=verified, oracle_vp_index=oracle_index)
    return report, _pbasis_text(report), EXIT_OK if verified else EXIT_CONTRACT


def _pbasis_text(report: PBasisReport) -> str:
    lines = [
        f"p={report.p} case={report.case} vp_disc={report.vp_disc} "
        f"vp_index={report.vp_index} vp_dK={report.vp_dK} verified={report.verified}"
    ]
    if report.shift is not None:
        lines.append(f"shift={report.shift} iterations={report.shift_iterations}")
    if report.oracle_vp_index is not None:
        lines.append(f"oracle_vp_index={report.oracle_vp_index}")
    for element in report.basis:
        lines.append(f"  [{', '.join(element.numerator)}] / {report.p}^{element.denom_exp}")
    return "\n".join(lines)


def cmd_basis(args: argparse.Namespace, settings: QuarticBasisSettings) -> Outcome:
    job = parse_job(a=args.a, b=args.b)
    limit = args.max_trial_division or settings.max_trial_division
    basis = integral_basis(job.a, job.b, max_trial_division=limit)
    report = GlobalBasisReport.from_basis(basis)
    lines = [f"d1={report.d1} d2={report.d2} d3={report.d3} ind={report.ind} dK={report.dK}"]
    lines += [f"  {num.format('a')} / {d}" for num, d in basis.rows()]
    if basis.conditional:
        lines.append(f"conditional: cofactor {basis.cofactor} assumed squarefree")
    return report, "\n".join(lines), EXIT_INCOMPLETE if basis.conditional else EXIT_OK


def cmd_disc(args: argparse.Namespace, settings: QuarticBasisSettings) -> Outcome:
    job = parse_job(a=args.a, b=args.b)
    field = TrinomialField(job.a, job.b)
    limit = args.max_trial_division or settings.max_trial_division
    factors, cofactor = factor_integer(field.discriminant, limit)
    report = DiscReport.build(field.discriminant, factors, cofactor)
    parts = [f"{q}^{e}" if e > 1 else str(q) for q, e in factors.items()]
    if cofactor != 1:
        parts.append(f"({cofactor})")
    sign = "-" if field.discriminant < 0 else ""
    text = f"{field.discriminant} = {sign}{' * '.join(parts) or '1'}"
    return report, text, EXIT_OK if cofactor == 1 else EXIT_INCOMPLETE


def cmd_polygon(args: argparse.Namespace, settings: QuarticBasisSettings) -> Outcome:
    job = parse_job(a=args.a, b=args.b, p=args.p)
    p = _require_p(job.p)
    poly = TrinomialField(job.a, job.b).polynomial
    regular, entries = is_p_regular(poly, p)
    polygons = []
    lines = []
    for factor, multiplicity in factor_shape_mod_p(poly, p):
        phi = factor.lift()
        polygon, _ = phi_polygon(poly, phi, p)
        phi_regular = all(e.squarefree for e in entries if e.phi == phi)
        index = ind_N(poly, phi, p).total
        polygons.append(PhiPolygonReport.build(list(phi.coeffs), multiplicity, polygon, index, phi_regular))
        lines.append(f"phi: {phi} multiplicity={multiplicity} ind={index} regular={phi_regular}")
        lines.append(render_polygon(polygon))
        lines += polygon.principal_part().describe()
    report = PolygonReport(
        p=str(p), polygons=polygons, index_lower_bound=index_lower_bound(poly, p), regular=regular
    )
    lines.append(f"index lower bound={report.index_lower_bound} regular={regular}")
    return report, "\n".join(lines), EXIT_OK


def check_instance(a: int, b: int, primes: Sequence[int], max_shift_iterations: int) -> Optional[list[CheckMismatch]]:
    """Compare the tables against the oracle at every prime; None when P is reducible."""
    try:
        field = TrinomialField(a, b)
    except ReducibleError:
        return None
    mismatches = []
    for p in primes:
        try:
            basis = local_basis(field, p, max_shift_iterations=max_shift_iterations)
        except TableMismatchError as exc:
            mismatches.append(CheckMismatch(a=str(a), b=str(b), p=str(p), detail=str(exc)))
            continue
        order, oracle_index = p_maximal_order(field.polynomial, p)
        if oracle_index != basis.vp_index:
            detail = f"case {basis.case}: vp_index {basis.vp_index} != oracle {oracle_index}"
        elif not all(contains(order, w) for w in basis.to_elements()):
            detail = f"case {basis.case}: element outside the p-maximal order"
        else:
            continue
        mismatches.append(CheckMismatch(a=str(a), b=str(b), p=str(p), detail=detail))
    return mismatches


def cmd_check(args: argparse.Namespace, settings: QuarticBasisSettings) -> Outcome:
    a_range, b_range = _parse_range(args.a), _parse_range(args.b)
    primes = [_require_p(parse_job(a=0, b=0, p=args.p).p)] if args.p is not None else settings.check_prime_list()
    grid = [(a, b) for a in a_range for b in b_range]
    logger.info("check grid=%s primes=%s workers=%s", len(grid), primes, settings.check_workers)
    with ThreadPoolExecutor(max_workers=settings.check_workers) as pool:
        results = list(
            pool.map(lambda ab: check_instance(ab[0], ab[1], primes, settings.max_shift_iterations), grid)
        )
    mismatches = [m for found in results if found for m in found]
    skipped = sum(1 for found in results if found is None)
    report = CheckReport(checked=len(grid) - skipped, skipped=skipped, mismatches=mismatches)
    lines = [f"checked={report.checked} skipped={report.skipped} mismatches={len(mismatches)}"]
    lines += [f"  a={m.a} b={m.b} p={m.p}: {m.detail}" for m in mismatches]
    return report, "\n".join(lines), EXIT_CONTRACT if mismatches else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="output_format", action="store_const", const="json")
    fmt.add_argument("--text", dest="output_format", action="store_const", const="text")
    common.add_argument("--max-trial-division", type=int, default=None)

    parser = argparse.ArgumentParser(prog="quartic-basis", description="Integral bases of X^4 + aX + b.")
    sub = parser.add_subparsers(dest="command", required=True)

    pbasis = sub.add_parser("pbasis", parents=[common], help="p-integral basis at one prime")
    pbasis.add_argument("--a", required=True)
    pbasis.add_argument("--b", required=True)
    pbasis.add_argument("--p", required=True)
    pbasis.add_argument("--verify", action="store_true", help="cross-check with the p-maximal order")
    pbasis.add_argument(
        "--basis", default=None, metavar="FILE", help="re-validate a pbasis JSON document ('-' reads stdin)"
    )
    pbasis.set_defaults(handler=cmd_pbasis)

    for name, handler, help_text in (
        ("basis", cmd_basis, "global integral basis"),
        ("disc", cmd_disc, "discriminant and its factorization"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("--a", required=True)
        cmd.add_argument("--b", required=True)
        cmd.set_defaults(handler=handler)

    polygon = sub.add_parser("polygon", parents=[common], help="phi-Newton polygons at p")
    polygon.add_argument("--a", required=True)
    polygon.add_argument("--b", required=True)
    polygon.add_argument("--p", required=True)
    polygon.set_defaults(handler=cmd_polygon)

    check = sub.add_parser("check", parents=[common], help="compare the tables with the oracle on a grid")
    check.add_argument("--a", required=True, help="LO:HI or a single integer")
    check.add_argument("--b", required=True, help="LO:HI or a single integer")
    check.add_argument("--p", default=None)
    check.set_defaults(handler=cmd_check)
    return parser


_EXIT_CODES: tuple[tuple[type[BaseException], int], ...] = (
    (ReducibleError, EXIT_REDUCIBLE),
    (TableMismatchError, EXIT_CONTRACT),
    (UnnormalizedInputError, EXIT_CONTRACT),
    (FactorizationIncompleteError, EXIT_INCOMPLETE),
)


def _emit(document: BaseModel, text: str, output_format: str) -> None:
    if output_format == "text":
        print(text)
    else:
        print(document.model_dump_json(indent=2))


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(level=settings.log_level)
    args = _build_parser().parse_args(argv)
    output_format = args.output_format or settings.output_format
    handler: Callable[[argparse.Namespace, QuarticBasisSettings], Outcome] = args.handler
    try:
        document, text, code = handler(args, settings)
    except Exception as exc:  # noqa: BLE001
        code = next((c for kind, c in _EXIT_CODES if isinstance(exc, kind)), EXIT_ERROR)
        if code == EXIT_ERROR and not isinstance(exc, (JobSpecError, ValueError)):
            logger.exception("command=%s failed", args.command)
        error = ErrorReport(error=type(exc).__name__, message=str(exc))
        if output_format == "text":
            print(f"error: {error.error}: {error.message}", file=sys.stderr)
        else:
            print(error.model_dump_json(indent=2))
        return code
    _emit(document, text, output_format)
    return code


if __name__ == "__main__":
    sys.exit(main())
