"""Command line front end.

Subcommands expose every computation and verification in the package:

    normal-form    rewrite an expression in the normally ordered basis
    verify         run the generator-relation grids, exit nonzero on failure
    fock-act       apply an expression to a Fock space vector
    dims           tabulate Fock versus partition-sum dimensions
    sym-euler      symmetric/exterior power dimensions and the Euler check
    triangularity  triangularity of the p(nu)q(mu) transition matrix

Configuration comes from --config, the HEISENFOCK_CONFIG environment
variable, or the built-in default (dimension 1, pairing [[1]]).  Exit
codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import product

from . import generators
from .config import Config, ConfigError, load_config
from .dimensions import compare_dims
from .expressions import ExprSyntaxError, evaluate
from .fock import FockVector, act_element
from .graded import GradedDims, ext_power, euler, sym_power
from .heisenberg import BasisIndexError, InvalidModeError, normal_order

_USAGE_ERRORS = (ConfigError, ExprSyntaxError, InvalidModeError, BasisIndexError)

_VARIANT_BY_FLAG = {
    "plain": generators.PLAIN,
    "transposed": generators.TRANSPOSED,
    "mixed": generators.MIXED,
}

_FAMILY_KINDS = {
    # trivial-relation family kinds (q side, p side) per variant
    generators.PLAIN: (generators.PLAIN, generators.PLAIN),
    generators.TRANSPOSED: (generators.TRANSPOSED, generators.TRANSPOSED),
    generators.MIXED: (generators.TRANSPOSED, generators.PLAIN),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heisenfock",
        description="Exact Heisenberg-algebra calculator and identity verifier.",
    )
    parser.add_argument("--config", help="path to a JSON configuration file")
    parser.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normal-form", help="normally order an expression")
    p.add_argument("expr")

    p = sub.add_parser("verify", help="verify the generator relations on a grid")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--variant", choices=sorted(_VARIANT_BY_FLAG), default="plain")

    p = sub.add_parser("fock-act", help="apply an expression to a Fock vector")
    p.add_argument("expr")
    p.add_argument("--on", default="1", help="state the expression acts on (default: the vacuum)")

    p = sub.add_parser("dims", help="compare graded dimensions")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-level", type=int, required=True)

    p = sub.add_parser("sym-euler", help="signed power dimensions and the Euler identity")
    p.add_argument("--space", required=True, help="config label or inline deg:dim[,deg:dim...]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ext", action="store_true", help="exterior instead of symmetric power")

    p = sub.add_parser("triangularity", help="triangularity of the p(nu)q(mu) expansion")
    p.add_argument("--weight", type=int, required=True)
    return parser


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_normal_form(args, config: Config) -> int:
    element = evaluate(args.expr, config)
    normal = normal_order(element, config.pairing)
    payload = {
        "input": args.expr,
        "normal_form": str(normal),
        "terms": [
            {
                "coefficient": str(c),
                "creation": [[i, size] for i, part in nu.assignments for size in sorted(part.parts)],
                "annihilation": [[i, size] for i, part in mu.assignments for size in sorted(part.parts)],
            }
            for (nu, mu), c in sorted(normal.terms.items(), key=lambda kv: str(kv[0]))
        ],
    }
    _emit(args, payload, [str(normal)])
    return 0


def _cmd_verify(args, config: Config) -> int:
    if args.max_degree < 0:
        raise ConfigError("--max-degree must be nonnegative")
    variant = _VARIANT_BY_FLAG[args.variant]
    q_kind, p_kind = _FAMILY_KINDS[variant]
    pairing = config.pairing
    d = pairing.dim
    if d < 1:
        raise ConfigError("verification needs dimension >= 1")
    degrees = range(args.max_degree + 1)
    count = 0
    for m, n, alpha, beta in product(degrees, degrees, range(d), range(d)):
        commute_ok = generators.verify_qq_pp_commute(m, n, alpha, beta, pairing, q_kind, p_kind)
        relation_ok = generators.verify_qp_relation(m, n, alpha, beta, pairing, variant)
        count += 1
        if not (commute_ok and relation_ok):
            failure = {
                "m": m,
                "n": n,
                "alpha": alpha,
                "beta": beta,
                "variant": args.variant,
                "commutators_vanish": commute_ok,
                "straightening_holds": relation_ok,
            }
            _emit(
                args,
                {"ok": False, "instances": count, "failure": failure},
                [
                    "FAIL at m=%d n=%d alpha=%d beta=%d (variant %s): %s"
                    % (
                        m,
                        n,
                        alpha,
                        beta,
                        args.variant,
                        "straightening relation violated"
                        if commute_ok
                        else "same-side commutator nonzero",
                    )
                ],
            )
            return 1
    _emit(
        args,
        {"ok": True, "instances": count, "variant": args.variant, "max_degree": args.max_degree},
        ["OK, %d relation instances verified" % count],
    )
    return 0


def _cmd_fock_act(args, config: Config) -> int:
    state = act_element(evaluate(args.on, config), FockVector.vacuum(), config.pairing)
    result = act_element(evaluate(args.expr, config), state, config.pairing)
    payload = {
        "result": str(result),
        "terms": [
            {
                "coefficient": str(c),
                "monomial": [[i, size] for i, part in nu.assignments for size in sorted(part.parts)],
            }
            for nu, c in sorted(result.terms.items(), key=lambda kv: str(kv[0]))
        ],
    }
    _emit(args, payload, [str(result)])
    return 0


def _format_table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return lines


def _cmd_dims(args, config: Config) -> int:
    if args.d < 1:
        raise ConfigError("--d must be positive")
    if args.max_level < 0:
        raise ConfigError("--max-level must be nonnegative")
    report = compare_dims(args.max_level, args.d)
    rows = [
        [str(r.level), str(r.fock), str(r.vistoli), "equal" if r.equal else "DIFFER"]
        for r in report.rows
    ]
    payload = {
        "dim": args.d,
        "all_equal": report.all_equal,
        "rows": [
            {"level": r.level, "fock": r.fock, "vistoli": r.vistoli, "equal": r.equal}
            for r in report.rows
        ],
    }
    _emit(args, payload, _format_table(["level", "fock", "vistoli", "equal?"], rows))
    return 0 if report.all_equal else 1


def _parse_space(spec: str, config: Config) -> GradedDims:
    if spec in config.spaces:
        return config.spaces[spec]
    dims: dict[int, int] = {}
    try:
        for chunk in spec.split(","):
            deg_text, dim_text = chunk.split(":")
            deg, dim = int(deg_text.strip()), int(dim_text.strip())
            if dim < 0:
                raise ValueError("negative dimension")
            dims[deg] = dims.get(deg, 0) + dim
    except ValueError as exc:
        raise ConfigError(
            "--space must name a configured space or be deg:dim[,deg:dim...]; got %r (%s)"
            % (spec, exc)
        ) from exc
    return GradedDims(dims)


def _cmd_sym_euler(args, config: Config) -> int:
    if args.k < 0:
        raise ConfigError("--k must be nonnegative")
    space = _parse_space(args.space, config)
    power = ext_power(space, args.k) if args.ext else sym_power(space, args.k)
    name = "ext" if args.ext else "sym"
    chi = euler(space)
    expected = generators.s_coefficient(-chi if args.ext else chi, args.k)
    actual = Fraction(euler(power))
    match = actual == expected
    sign = "-" if args.ext else ""
    lines = [
        "%s^%d dims: %s" % (name, args.k, power),
        "euler(%s^%d W) = %d" % (name, args.k, euler(power)),
        "s^%d(%seuler W) = %s" % (args.k, sign, expected),
        "match: %s" % ("yes" if match else "no"),
    ]
    payload = {
        "power": name,
        "k": args.k,
        "dims": power.items(),
        "euler": euler(power),
        "binomial": str(expected),
        "match": match,
    }
    _emit(args, payload, lines)
    return 0 if match else 1


def _cmd_triangularity(args, config: Config) -> int:
    if args.weight < 0:
        raise ConfigError("--weight must be nonnegative")
    witness = generators.triangularity_counterexample(args.weight, config.pairing)
    if witness is None:
        _emit(
            args,
            {"ok": True, "weight": args.weight},
            ["OK, triangular with nonzero diagonal up to weight %d" % args.weight],
        )
        return 0
    nu, mu, failure_kind = witness[0], witness[1], witness[2]
    _emit(
        args,
        {"ok": False, "weight": args.weight, "kind": failure_kind, "nu": str(nu), "mu": str(mu)},
        ["FAIL (%s) at nu=%s mu=%s" % (failure_kind, nu, mu)],
    )
    return 1


_HANDLERS = {
    "normal-form": _cmd_normal_form,
    "verify": _cmd_verify,
    "fock-act": _cmd_fock_act,
    "dims": _cmd_dims,
    "sym-euler": _cmd_sym_euler,
    "triangularity": _cmd_triangularity,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return _HANDLERS[args.command](args, config)
    except _USAGE_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
