"""
Command-Line Commands
=====================

Subcommands of the theta prover.

This module provides:
- cmd_verify: verify an identity file, print or save its certificate
- cmd_pi: list the integer points of a fundamental parallelepiped
- cmd_relations: print the shared contiguous relations of an identity
- cmd_expand: print truncated expansions
- cmd_discover: find dependencies among candidate products
- cmd_explain: transcript of a saved certificate
- build_parser / main: argparse front end

Exit codes:
    0  Proved (discover: some dependency Proved)
    1  Failed, Unsupported, I/O errors, engine errors
    2  VerifiedToOrder
    3  parse errors
    64 usage errors

Only this module writes to stdout/stderr.

Related Files:
- app.py: entry point
- services/config/run_config.py: RunConfig
- theta/prover/: the engine
"""

from __future__ import annotations
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from services.config import DEFAULT_ORDER, ModeOverride, RunConfig, resolve_run_config
from services.storage import CertificateStorage
from services.utils import configure_logging
from theta import __version__
from theta.errors import NoCandidatesSurvive, ParseError, ThetaError
from theta.exporters import (
    certificate_from_json,
    certificate_to_data,
    certificate_to_json,
    export_certificate_xlsx,
)
from theta.lattice import pi_points
from theta.model.types import identity_denominator
from theta.parser import (
    format_relation_ratio,
    format_term,
    parse_candidates,
    parse_identity,
    parse_relations,
    parse_shifts,
    parse_vector,
    parse_vector_list,
)
from theta.prover import DEFAULT_DISCOVERY_ORDER, Certificate, Status, discover, explain, verify
from theta.relations import MismatchReport, common_relation_system
from theta.series import expand_identity_residual, expand_term

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_VERIFIED_TO_ORDER = 2
EXIT_PARSE_ERROR = 3
EXIT_USAGE = 64

_STATUS_EXIT = {
    Status.PROVED: EXIT_OK,
    Status.VERIFIED_TO_ORDER: EXIT_VERIFIED_TO_ORDER,
    Status.FAILED: EXIT_FAILED,
    Status.UNSUPPORTED: EXIT_FAILED,
}


def exit_code_for(status: Status) -> int:
    return _STATUS_EXIT[status]


# ============================================================================
# I/O HELPERS
# ============================================================================

class _InputError(Exception):
    """File could not be read; message already formatted."""


def _read(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def report_parse_error(source: str, text: str, err: ParseError, stream: TextIO) -> None:
    """`source:start-end: Kind: message`, then the offending line with a caret run."""
    print(f"{source}:{err.span.start}-{err.span.end}: {err.kind.value}: {err.message}", file=stream)
    data = text.encode("utf-8")
    start = min(err.span.start, len(data))
    line_start = data.rfind(b"\n", 0, start) + 1
    line_end = data.find(b"\n", start)
    line_end = len(data) if line_end == -1 else line_end
    line = data[line_start:line_end].decode("utf-8", errors="replace")
    if line.strip():
        indent = len(data[line_start:start].decode("utf-8", errors="replace"))
        width = max(1, len(data[start:min(err.span.end, line_end)].decode("utf-8", errors="replace")))
        print("  " + line, file=stream)
        print("  " + " " * indent + "^" * width, file=stream)


def _load_shifts(config: RunConfig, stderr: TextIO, r: int):
    if config.shifts is None:
        return None
    text = _read(config.shifts)
    try:
        shifts = parse_shifts(text)
    except ParseError as err:
        report_parse_error(str(config.shifts), text, err, stderr)
        raise
    for alpha in shifts:
        if len(alpha) != r:
            raise _InputError(f"{config.shifts}: shift has {len(alpha)} entries for {r} variables")
    return shifts


def _emit_certificate(cert: Certificate, config: RunConfig, stdout: TextIO) -> None:
    text = certificate_to_json(cert)
    stdout.write(text if config.json else explain(cert))
    if config.out_path is not None:
        CertificateStorage(config.out_path).save(text)
    if config.xlsx_path is not None:
        export_certificate_xlsx(cert, config.xlsx_path)


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_verify(path: Path, config: RunConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Verify one `.theta` file; exit code follows the certificate status."""
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    try:
        text = _read(path)
    except _InputError as exc:
        print(exc, file=stderr)
        return EXIT_FAILED
    try:
        identity = parse_identity(text)
    except ParseError as err:
        report_parse_error(str(path), text, err, stderr)
        return EXIT_PARSE_ERROR
    try:
        shifts = _load_shifts(config, stderr, identity.r)
    except ParseError:
        return EXIT_PARSE_ERROR
    except _InputError as exc:
        print(exc, file=stderr)
        return EXIT_FAILED

    cert = verify(identity, shifts=shifts, order=config.order, mode=config.mode_override)
    _emit_certificate(cert, config, stdout)
    return exit_code_for(cert.status)


def cmd_pi(target: str, config: RunConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """|Π_W| and its points; target is a file of vectors or an inline "(1,1);(0,2)"."""
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    source = target
    candidate = Path(target)
    try:
        text = _read(candidate) if candidate.is_file() else target
    except _InputError as exc:
        print(exc, file=stderr)
        return EXIT_FAILED
    try:
        vectors = parse_vector_list(text)
    except ParseError as err:
        report_parse_error(source, text, err, stderr)
        return EXIT_PARSE_ERROR
    if any(v.denominator != 1 for w in vectors for v in w):
        print(f"{source}: W must consist of integer vectors", file=stderr)
        return EXIT_USAGE
    W = [tuple(int(v) for v in w) for w in vectors]
    try:
        pi = pi_points(W)
    except ThetaError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAILED

    if config.json:
        data = {
            "W": [[str(v) for v in w] for w in W],
            "count": str(len(pi)),
            "pi": [[str(v) for v in p] for p in pi],
        }
        stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write(f"|Pi_W| = {len(pi)}\n")
        for p in pi:
            stdout.write("(" + ",".join(str(v) for v in p) + ")\n")
    return EXIT_OK


def cmd_relations(path: Path, config: RunConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Shared relations in ratio form, or the first mismatching term."""
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    try:
        text = _read(path)
    except _InputError as exc:
        print(exc, file=stderr)
        return EXIT_FAILED
    try:
        identity = parse_identity(text)
    except ParseError as err:
        report_parse_error(str(path), text, err, stderr)
        return EXIT_PARSE_ERROR
    try:
        shifts = _load_shifts(config, stderr, identity.r)
    except ParseError:
        return EXIT_PARSE_ERROR
    except _InputError as exc:
        print(exc, file=stderr)
        return EXIT_FAILED

    try:
        system = common_relation_system(identity, shifts)
    except ThetaError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAILED
    if isinstance(system, MismatchReport):
        term = identity.terms[system.term_index]
        print(f"relation mismatch at {system.describe()}", file=stderr)
        print(f"  term {system.term_index + 1}: {format_term(term, identity.vars)}", file=stderr)
        return EXIT_FAILED

    for rel in system:
        stdout.write(format_relation_ratio(rel, identity.vars) + "\n")
    return EXIT_OK


def cmd_expand(
    path: Path,
    config: RunConfig,
    eta: Optional[str] = None,
    term_index: Optional[int] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Expansion to q^N of one term (term_index, 1-based) or of the residual Σ terms.

    With eta only that a-exponent is printed.
    """
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    try:
        text = _read(path)
        identity = parse_identity(text)
    except _InputError as exc:
        print(exc, file=stderr)
        return EXIT_FAILED
    except ParseError as err:
        report_parse_error(str(path), text, err, stderr)
        return EXIT_PARSE_ERROR

    target = None
    if eta is not None:
        try:
            vector = parse_vector(eta)
        except ParseError as err:
            report_parse_error("--eta", eta, err, stderr)
            return EXIT_PARSE_ERROR
        if len(vector) != identity.r or any(v.denominator != 1 for v in vector):
            print(f"--eta needs {identity.r} integers", file=stderr)
            return EXIT_USAGE
        target = tuple(int(v) for v in vector)
    if term_index is not None and not 1 <= term_index <= len(identity.terms):
        print(f"--term must be between 1 and {len(identity.terms)}", file=stderr)
        return EXIT_USAGE

    D = identity_denominator(identity)
    try:
        if term_index is None:
            expansion = expand_identity_residual(identity, config.order, D)
        else:
            expansion = expand_term(identity.terms[term_index - 1], config.order, D)
    except ThetaError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAILED

    entries = [(target, expansion.entry(target))] if target is not None else list(expansion.items())
    if config.json:
        data = {
            "order": str(config.order),
            "entries": [
                {
                    "eta": [str(v) for v in key],
                    "series": [{"q_exponent": str(e), "constant": str(c)} for e, c in series.items()],
                }
                for key, series in entries
            ],
        }
        stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    else:
        if not entries:
            stdout.write(f"no nonzero coefficients up to q^{config.order}\n")
        for key, series in entries:
            stdout.write("(" + ",".join(str(v) for v in key) + f"): {series}\n")
    return EXIT_OK


def cmd_discover(
    relations_path: Path,
    candidates_path: Path,
    config: RunConfig,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Dependencies among candidates; each printed with its certificate."""
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    parsed = []
    for path, parse in ((relations_path, parse_relations), (candidates_path, parse_candidates)):
        try:
            text = _read(path)
        except _InputError as exc:
            print(exc, file=stderr)
            return EXIT_FAILED
        try:
            parsed.append(parse(text))
        except ParseError as err:
            report_parse_error(str(path), text, err, stderr)
            return EXIT_PARSE_ERROR
        except ThetaError as exc:
            print(f"{path}: {type(exc).__name__}: {exc}", file=stderr)
            return EXIT_FAILED
    (rel_vars, relations), (cand_vars, candidates) = parsed

    if not candidates:
        print(f"{candidates_path}: no candidate products", file=stderr)
        return EXIT_USAGE
    if tuple(rel_vars) != tuple(cand_vars):
        print(f"variables differ: {' '.join(rel_vars)} vs {' '.join(cand_vars)}", file=stderr)
        return EXIT_USAGE

    try:
        result = discover(relations, candidates, order=config.order, variables=cand_vars)
    except NoCandidatesSurvive as exc:
        print("no candidate satisfies every relation:", file=stderr)
        for index, why in exc.rejections:
            print(f"  candidate {index + 1}: {why}", file=stderr)
        return EXIT_FAILED
    except ThetaError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAILED

    if config.json:
        data = {
            "dependencies": [
                {"vector": [str(v) for v in dep.vector], "certificate": certificate_to_data(dep.certificate)}
                for dep in result.dependencies
            ],
            "rejections": [{"candidate": str(i + 1), "reason": why} for i, why in result.rejections],
        }
        stdout.write(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        stdout.write(f"{len(result.candidates)} candidates, |Pi_W| = {len(result.pi)}\n")
        for i, why in result.rejections:
            stdout.write(f"rejected candidate {i + 1}: {why}\n")
        if not result.dependencies:
            stdout.write("no dependencies found\n")
        for dep in result.dependencies:
            stdout.write("\ndependency (" + ",".join(str(v) for v in dep.vector) + ")\n")
            stdout.write(explain(dep.certificate))

    statuses = [dep.certificate.status for dep in result.dependencies]
    if Status.PROVED in statuses:
        return EXIT_OK
    if Status.VERIFIED_TO_ORDER in statuses:
        return EXIT_VERIFIED_TO_ORDER
    return EXIT_FAILED


def cmd_explain(path: Path, config: RunConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Transcript of a saved certificate; exit code follows its status."""
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    text = CertificateStorage(path).load_text()
    if text is None:
        print(f"cannot read certificate {path}", file=stderr)
        return EXIT_FAILED
    try:
        cert = certificate_from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"{path}: not a certificate ({exc})", file=stderr)
        return EXIT_PARSE_ERROR
    stdout.write(certificate_to_json(cert) if config.json else explain(cert))
    return exit_code_for(cert.status)


# ============================================================================
# ARGUMENT PARSING
# ============================================================================

class UsageArgumentParser(argparse.ArgumentParser):
    """argparse with exit status 64 on usage errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser, shifts: bool = False, mode: bool = False) -> None:
    parser.add_argument("--order", type=int, default=None, help="truncation order N (default 100, or THETA_ORDER)")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    if shifts:
        parser.add_argument("--shifts", default=None, help="file with one shift vector per line")
    if mode:
        parser.add_argument("--mode", choices=[m.value for m in ModeOverride], default=None)
        parser.add_argument("--out", default=None, help="save the certificate JSON here")
        parser.add_argument("--xlsx", default=None, help="export the certificate as an Excel workbook")


def build_parser() -> UsageArgumentParser:
    parser = UsageArgumentParser(prog="theta", description="Exact verifier for theta function identities.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=UsageArgumentParser)

    p = sub.add_parser("verify", help="verify an identity file")
    p.add_argument("path")
    _add_common(p, shifts=True, mode=True)

    p = sub.add_parser("pi", help="integer points of the parallelepiped of W")
    p.add_argument("W", help='file of vectors or inline "(1,1);(0,2)"')
    _add_common(p)

    p = sub.add_parser("relations", help="shared contiguous relations of an identity")
    p.add_argument("path")
    _add_common(p, shifts=True)

    p = sub.add_parser("expand", help="truncated expansion of an identity's residual or one term")
    p.add_argument("path")
    p.add_argument("--eta", default=None, help="a-exponent vector, e.g. (1,-1)")
    p.add_argument("--term", type=int, default=None, help="expand only this term (1-based)")
    _add_common(p)

    p = sub.add_parser("discover", help="find dependencies among candidate products")
    p.add_argument("relations")
    p.add_argument("candidates")
    _add_common(p)

    p = sub.add_parser("explain", help="transcript of a saved certificate")
    p.add_argument("path")
    _add_common(p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    default_order = DEFAULT_DISCOVERY_ORDER if args.command == "discover" else DEFAULT_ORDER
    try:
        config = resolve_run_config(
            order=args.order,
            shifts=getattr(args, "shifts", None),
            json_output=args.json,
            mode=getattr(args, "mode", None),
            out=getattr(args, "out", None),
            xlsx=getattr(args, "xlsx", None),
            verbose=args.verbose,
            default_order=default_order,
        )
    except ValueError as exc:
        parser.error(str(exc))

    if args.command == "verify":
        return cmd_verify(Path(args.path), config)
    if args.command == "pi":
        return cmd_pi(args.W, config)
    if args.command == "relations":
        return cmd_relations(Path(args.path), config)
    if args.command == "expand":
        return cmd_expand(Path(args.path), config, eta=args.eta, term_index=args.term)
    if args.command == "discover":
        return cmd_discover(Path(args.relations), Path(args.candidates), config)
    return cmd_explain(Path(args.path), config)
