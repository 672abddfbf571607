"""Command-line front end and the plain-text file formats.

Game file: a header line "m n", then m rows of n space-separated rationals
(player 1), one blank line, then m rows for player 2.  Certificate files
are "key: value" lines with matrix blocks; all values are exact and diff
friendly, with irrational scalars written as "a + b*sqrt(d)".

Exit codes: 0 equivalent / checks passed, 1 parse or I/O error,
2 not equivalent (or failed verification), 3 degenerate zero-sum-like,
4 rejected input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .games import BimatrixGame, PatParams, Rank1GameSpec, generate_disguised_game
from .matrices import ExactMatrix
from .nash import SizeLimitError, cross_verify_equivalence
from .reduction import (
    DEGENERATE_ZERO_SUM,
    EQUIVALENT,
    NOT_EQUIVALENT,
    REJECTED,
    ReductionCertificate,
    ReductionResult,
    check_certificate,
    reduce_game,
)
from .scalars import Scalar, format_scalar, parse_rational, parse_scalar

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_EQUIVALENT = 2
EXIT_DEGENERATE = 3
EXIT_REJECTED = 4

_STATUS_EXIT = {
    EQUIVALENT: EXIT_OK,
    NOT_EQUIVALENT: EXIT_NOT_EQUIVALENT,
    DEGENERATE_ZERO_SUM: EXIT_DEGENERATE,
    REJECTED: EXIT_REJECTED,
}


class GameFileError(ValueError):
    """Malformed game or certificate file."""


# -- game files -------------------------------------------------------------


def parse_game_text(text: str) -> BimatrixGame:
    lines = text.splitlines()
    if not lines:
        raise GameFileError("empty game file")
    header = lines[0].split()
    if len(header) != 2:
        raise GameFileError("header must be 'm n'")
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GameFileError(f"bad header: {exc}") from None
    if m < 1 or n < 1:
        raise GameFileError("m and n must be positive")
    body = lines[1:]
    expected = 2 * m + 1
    if len(body) < expected or any(s.strip() for s in body[expected:]):
        raise GameFileError(f"expected {expected} lines after the header")
    if body[m].strip():
        raise GameFileError("blocks must be separated by one blank line")

    def parse_block(rows: list[str], label: str) -> ExactMatrix:
        out = []
        for line in rows:
            tokens = line.split()
            if len(tokens) != n:
                raise GameFileError(
                    f"{label}: expected {n} entries per row, got {len(tokens)}"
                )
            try:
                out.append([parse_rational(tok) for tok in tokens])
            except ValueError as exc:
                raise GameFileError(f"{label}: {exc}") from None
        return ExactMatrix.from_rows(out)

    a = parse_block(body[:m], "payoff block A")
    b = parse_block(body[m + 1 : expected], "payoff block B")
    return BimatrixGame(a, b)


def format_game_text(game: BimatrixGame) -> str:
    def block(mat: ExactMatrix) -> list[str]:
        return [
            " ".join(format_scalar(e, compact=True) for e in row)
            for row in mat.entries
        ]

    lines = [f"{game.m} {game.n}"] + block(game.A) + [""] + block(game.B)
    return "\n".join(lines) + "\n"


# -- certificate documents ---------------------------------------------------


@dataclass(frozen=True)
class CertificateDocument:
    """Plain-data mirror of a reduction outcome, as read from or written to disk."""

    status: str
    reason: str | None = None
    case: str | None = None
    pivot: tuple[int, int] | None = None
    gamma: Scalar | None = None
    u_hat: tuple[Scalar, ...] | None = None
    v_hat: tuple[Scalar, ...] | None = None
    r_hat: tuple[Scalar, ...] | None = None
    c_hat: tuple[Scalar, ...] | None = None
    A_hat: ExactMatrix | None = None
    B_hat: ExactMatrix | None = None

    @classmethod
    def from_result(cls, result: ReductionResult) -> "CertificateDocument":
        cert = result.certificate
        if cert is None:
            return cls(status=result.status, reason=result.reason)
        return cls(
            status=result.status,
            case=cert.case,
            pivot=cert.pivot,
            gamma=cert.gamma,
            u_hat=cert.u_hat,
            v_hat=cert.v_hat,
            r_hat=cert.r_hat,
            c_hat=cert.c_hat,
            A_hat=cert.A_hat,
            B_hat=cert.B_hat,
        )

    def to_certificate(self) -> ReductionCertificate:
        if self.status != EQUIVALENT:
            raise GameFileError(f"document status is '{self.status}', not a certificate")
        missing = [
            name
            for name in ("case", "gamma", "u_hat", "v_hat", "r_hat", "c_hat", "A_hat", "B_hat")
            if getattr(self, name) is None
        ]
        if missing:
            raise GameFileError(f"certificate is missing fields: {', '.join(missing)}")
        return ReductionCertificate(
            gamma=self.gamma,
            case=self.case,
            pivot=self.pivot,
            u_hat=self.u_hat,
            v_hat=self.v_hat,
            r_hat=self.r_hat,
            c_hat=self.c_hat,
            A_hat=self.A_hat,
            B_hat=self.B_hat,
        )


def _vector_text(vec) -> str:
    return " ".join(format_scalar(x, compact=True) for x in vec)


def _matrix_lines(mat: ExactMatrix) -> list[str]:
    return [" ".join(format_scalar(e, compact=True) for e in row) for row in mat.entries]


def format_certificate_text(doc: CertificateDocument) -> str:
    lines = [f"status: {doc.status}"]
    if doc.reason is not None:
        lines.append(f"reason: {doc.reason}")
    if doc.case is not None:
        lines.append(f"case: {doc.case}")
    if doc.pivot is not None:
        lines.append(f"pivot: {doc.pivot[0]} {doc.pivot[1]}")
    if doc.gamma is not None:
        lines.append(f"gamma: {format_scalar(doc.gamma)}")
    for name in ("u_hat", "v_hat", "r_hat", "c_hat"):
        vec = getattr(doc, name)
        if vec is not None:
            lines.append(f"{name}: {_vector_text(vec)}")
    for name in ("A_hat", "B_hat"):
        mat = getattr(doc, name)
        if mat is not None:
            lines.append(f"{name}:")
            lines.extend(_matrix_lines(mat))
    return "\n".join(lines) + "\n"


_KEYS = {
    "status",
    "reason",
    "case",
    "pivot",
    "gamma",
    "u_hat",
    "v_hat",
    "r_hat",
    "c_hat",
    "A_hat",
    "B_hat",
}


def parse_certificate_text(text: str) -> CertificateDocument:
    fields: dict = {}
    matrix_key: str | None = None
    matrix_rows: list[list[Scalar]] = []

    def flush_matrix():
        nonlocal matrix_key, matrix_rows
        if matrix_key is not None:
            if not matrix_rows:
                raise GameFileError(f"{matrix_key}: empty matrix block")
            fields[matrix_key] = ExactMatrix.from_rows(matrix_rows)
            matrix_key, matrix_rows = None, []

    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if sep and key in _KEYS:
            flush_matrix()
            value = value.strip()
            if key in ("A_hat", "B_hat"):
                matrix_key = key
            elif key in ("status", "reason", "case"):
                fields[key] = value
            elif key == "pivot":
                parts = value.split()
                if len(parts) != 2:
                    raise GameFileError("pivot must be two indices")
                fields[key] = (int(parts[0]), int(parts[1]))
            elif key == "gamma":
                fields[key] = parse_scalar(value)
            else:
                fields[key] = tuple(parse_scalar(tok) for tok in value.split())
        elif matrix_key is not None:
            matrix_rows.append([parse_scalar(tok) for tok in line.split()])
        else:
            raise GameFileError(f"unexpected line: {raw!r}")
    flush_matrix()
    if "status" not in fields:
        raise GameFileError("document has no status line")
    return CertificateDocument(**fields)


# -- hidden-parameter sidecar -------------------------------------------------


def format_hidden_text(spec: Rank1GameSpec, pat: PatParams) -> str:
    lines = [
        f"alpha1: {pat.alpha1}",
        f"alpha2: {pat.alpha2}",
        f"beta1: {pat.beta1}",
        f"beta2: {pat.beta2}",
        f"u: {_vector_text(pat.u)}",
        f"v: {_vector_text(pat.v)}",
        f"r: {_vector_text(spec.r)}",
        f"c: {_vector_text(spec.c)}",
        "A:",
    ]
    lines.extend(_matrix_lines(spec.A))
    return "\n".join(lines) + "\n"


def parse_hidden_text(text: str) -> tuple[Rank1GameSpec, PatParams]:
    fields: dict = {}
    matrix_rows: list[list[Scalar]] = []
    in_matrix = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if in_matrix:
            matrix_rows.append([parse_scalar(tok) for tok in line.split()])
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise GameFileError(f"unexpected line: {raw!r}")
        value = value.strip()
        if key == "A":
            in_matrix = True
        elif key in ("alpha1", "alpha2", "beta1", "beta2"):
            fields[key] = parse_rational(value)
        elif key in ("u", "v", "r", "c"):
            fields[key] = tuple(parse_scalar(tok) for tok in value.split())
        else:
            raise GameFileError(f"unknown key: {key!r}")
    if not matrix_rows:
        raise GameFileError("sidecar has no base matrix")
    spec = Rank1GameSpec(
        A=ExactMatrix.from_rows(matrix_rows), r=fields["r"], c=fields["c"]
    )
    pat = PatParams(
        alpha1=fields["alpha1"],
        alpha2=fields["alpha2"],
        beta1=fields["beta1"],
        beta2=fields["beta2"],
        u=fields["u"],
        v=fields["v"],
    )
    return spec, pat


# -- commands -----------------------------------------------------------------


def _read_game(path: str) -> BimatrixGame:
    return parse_game_text(Path(path).read_text())


def _parse_pivot(text: str) -> tuple[int, int]:
    parts = text.replace(",", " ").split()
    if len(parts) != 2:
        raise GameFileError("--pivot expects 'l,k'")
    return (int(parts[0]), int(parts[1]))


def cmd_reduce(args) -> int:
    game = _read_game(args.input)
    result = reduce_game(game, pivot=_parse_pivot(args.pivot))
    doc = CertificateDocument.from_result(result)
    text = format_certificate_text(doc)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return _STATUS_EXIT[result.status]


def cmd_check(args) -> int:
    game = _read_game(args.input)
    result = reduce_game(game, pivot=_parse_pivot(args.pivot))
    if result.status == EQUIVALENT:
        print(f"equivalent gamma={format_scalar(result.certificate.gamma)}")
    elif result.reason:
        print(f"{result.status} reason={result.reason}")
    else:
        print(result.status)
    return _STATUS_EXIT[result.status]


def cmd_generate(args) -> int:
    try:
        game, spec, pat = generate_disguised_game(
            args.m, args.n, args.seed, args.entry_bound
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    out = Path(args.output)
    out.write_text(format_game_text(game))
    sidecar = out.with_name(out.name + ".hidden")
    sidecar.write_text(format_hidden_text(spec, pat))
    print(f"wrote {out} and {sidecar}")
    return EXIT_OK


def cmd_verify(args) -> int:
    game = _read_game(args.game)
    doc = parse_certificate_text(Path(args.certificate).read_text())
    cert = doc.to_certificate()
    problems = check_certificate(game, cert)
    for p in problems:
        print(f"FAIL {p}")
    if args.nash:
        try:
            agree = cross_verify_equivalence(game, cert.reduced_game())
        except SizeLimitError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_REJECTED
        if not agree:
            problems.append("nash cross-check failed")
            print("FAIL nash cross-check failed")
    if problems:
        return EXIT_NOT_EQUIVALENT
    print("certificate ok" + (" (nash cross-check passed)" if args.nash else ""))
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="rank1eq",
        description="Decide strategic equivalence of a bimatrix game to a rank-1 game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_reduce = sub.add_parser("reduce", help="reduce a game file, emit a certificate")
    p_reduce.add_argument("input")
    p_reduce.add_argument("--output", help="certificate path (default: stdout)")
    p_reduce.add_argument(
        "--pivot", default="0,0", help="anchor cell l,k for the final case (0-based)"
    )
    p_reduce.set_defaults(func=cmd_reduce)

    p_check = sub.add_parser("check", help="like reduce, but print only the status")
    p_check.add_argument("input")
    p_check.add_argument("--pivot", default="0,0")
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("generate", help="write a disguised rank-1 game + sidecar")
    p_gen.add_argument("m", type=int)
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--entry-bound", type=int, default=5)
    p_gen.add_argument("--output", required=True)
    p_gen.set_defaults(func=cmd_generate)

    p_verify = sub.add_parser("verify", help="re-check a certificate against a game")
    p_verify.add_argument("game")
    p_verify.add_argument("certificate")
    p_verify.add_argument(
        "--nash",
        action="store_true",
        help="also cross-check equilibrium sets (small games only)",
    )
    p_verify.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GameFileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
