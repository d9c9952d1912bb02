"""Command line interface. JSON answers go to stdout with sorted keys,
diagnostics to stderr. Exit codes: 0 for answered queries (a "no" is an
answer), 2 for usage or domain errors, 3 for resource-guard refusals.
"""

import argparse
import json
import re
import sys

from . import abgroup, gf2ext, gf2poly, oracle, realize
from .errors import DomainError, ResourceError, UsageError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit(payload, args):
    if args.json_pretty:
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _parse_cardinal(text):
    if text == "inf":
        return realize.Cardinal.infinite("inf")
    match = re.fullmatch(r"aleph_?(\d+)", text)
    if match:
        return realize.Cardinal.infinite(f"aleph_{match.group(1)}")
    if re.fullmatch(r"\d+", text):
        return realize.Cardinal.finite(int(text))
    raise UsageError(
        f"not a cardinal: {text!r} (want a decimal integer, 'inf', or 'aleph<k>')"
    )


def _parse_group(text):
    tokens = [t for t in re.split(r"[x,\s]+", text.strip()) if t]
    if not tokens:
        raise UsageError("empty group description")
    orders = []
    for tok in tokens:
        body = tok[1:] if tok[:1] in ("C", "c") else tok
        if not body.isdigit() or int(body) < 1:
            raise UsageError(f"bad cyclic order token: {tok!r}")
        orders.append(int(body))
    return orders


def _parse_pgroup_shape(text):
    match = re.fullmatch(r"[rR](\d+)", text)
    if match:
        rank = int(match.group(1))
        if rank < 0:
            raise UsageError(f"bad rank: {text!r}")
        return [1] * rank
    exponents = []
    for tok in (t for t in re.split(r"[x,\s]+", text.strip()) if t):
        if not tok.isdigit() or int(tok) < 1:
            raise UsageError(f"bad exponent token: {tok!r}")
        exponents.append(int(tok))
    if not exponents:
        raise UsageError("empty p-group shape")
    return exponents


def _cardinal_query(card):
    if card.is_finite:
        return {"kind": "cardinal", "value": card.value, "label": None}
    return {"kind": "cardinal", "value": None, "label": card.label}


def _cardinal_from_query(query):
    if query.get("value") is not None:
        return realize.Cardinal.finite(query["value"])
    return realize.Cardinal.infinite(query["label"])


def cmd_realize(args):
    card = _parse_cardinal(args.cardinal)
    answer = realize.realize_cardinal(card)
    payload = realize.answer_to_dict(answer)
    payload["query"] = _cardinal_query(card)
    _emit(payload, args)
    return EXIT_OK


def cmd_realize_group(args):
    orders = _parse_group(args.group)
    group = abgroup.AbelianGroup.from_cyclic_orders(orders)
    payload = {"query": {"kind": "group", "orders": orders}}
    if group.order % 2 == 0:
        payload.update(
            realizable=None,
            witness=None,
            certificate=None,
            cross_check=None,
            reason=(
                "even-order groups are outside this classification; "
                "only odd-order unit groups are decided"
            ),
        )
        _emit(payload, args)
        return EXIT_OK
    witness = realize.realize_group_odd(group)
    if group.order <= realize.GROUP_ALGEBRA_CAP:
        subset = realize.group_algebra_subset_search(group)
        cross = {
            "within_guards": True,
            "agrees": (witness is None) == (subset is None),
            "subset_degrees": None if subset is None else list(subset.degrees),
        }
    else:
        cross = {"within_guards": False, "agrees": None, "subset_degrees": None}
    payload["cross_check"] = cross
    if witness is None:
        payload.update(
            realizable=False,
            witness=None,
            certificate=None,
            reason=(
                "the primary decomposition does not partition into "
                "unit-group blocks of fields GF(2**n)"
            ),
        )
    else:
        payload.update(
            realizable=True,
            witness=realize.witness_to_dict(witness),
            certificate={
                "exponents": list(witness.degrees),
                "product": witness.unit_count(),
            },
            reason=None,
        )
    _emit(payload, args)
    return EXIT_OK


def cmd_pgroup(args):
    exponents = _parse_pgroup_shape(args.shape)
    payload = {
        "query": {"kind": "p_group", "p": args.p, "exponents": exponents}
    }
    if args.p == 2:
        payload.update(
            realizable=None,
            witness=None,
            reason=(
                "the elementary-abelian criterion does not hold at p = 2: "
                "the units of GF(5) form C_4, a non-elementary 2-group"
            ),
        )
        _emit(payload, args)
        return EXIT_OK
    group = abgroup.AbelianGroup.p_group(args.p, exponents)
    witness = realize.realize_p_group(args.p, group)
    if witness is None:
        mersenne = (args.p + 1) & args.p == 0
        if not mersenne:
            why = f"{args.p} is not a Mersenne prime 2**n - 1"
        else:
            why = "the group is not elementary abelian"
        payload.update(realizable=False, witness=None, reason=why)
    else:
        payload.update(
            realizable=True,
            witness=realize.witness_to_dict(witness),
            reason=None,
        )
    _emit(payload, args)
    return EXIT_OK


def cmd_factor_poly(args):
    poly = gf2poly.from_hex(args.hex)
    factors = gf2poly.factor(poly, seed=args.seed)
    payload = {
        "input": {
            "hex": gf2poly.to_hex(poly),
            "terms": gf2poly.to_terms(poly),
            "degree": gf2poly.degree(poly),
        },
        "factors": [
            {
                "hex": gf2poly.to_hex(p),
                "terms": gf2poly.to_terms(p),
                "degree": gf2poly.degree(p),
                "multiplicity": m,
            }
            for p, m in factors
        ],
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_tensor_split(args):
    degrees = gf2ext.tensor_split(args.a, args.b)
    payload = {
        "a": args.a,
        "b": args.b,
        "degrees": sorted(degrees, reverse=True),
        "dimension_check": sum(degrees) == args.a * args.b,
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_verify(args):
    try:
        with open(args.witness_file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read witness file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"witness file is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "query" not in data:
        raise UsageError("witness file lacks a 'query' field")
    query = data["query"]
    kind = query.get("kind")
    if kind == "cardinal":
        expected = _cardinal_from_query(query)
    elif kind == "group":
        expected = abgroup.AbelianGroup.from_cyclic_orders(query["orders"])
    elif kind == "p_group":
        expected = abgroup.AbelianGroup.p_group(query["p"], query["exponents"])
    else:
        raise UsageError(f"unknown query kind: {kind!r}")
    if not data.get("witness"):
        payload = {
            "verified": None,
            "method": None,
            "reason": "the answer carries no witness to verify",
        }
        _emit(payload, args)
        return EXIT_OK
    witness = realize.witness_from_dict(data["witness"])
    verified = oracle.verify_witness(witness, expected)
    if isinstance(witness, realize.RationalFunctionField):
        method = "symbolic"
    elif isinstance(witness, realize.EvenUnitRing):
        method = "survey"
    elif sum(witness.degrees) <= oracle.DIM_CAP:
        method = "enumeration"
    else:
        method = "formula"
    _emit({"verified": verified, "method": method, "reason": None}, args)
    return EXIT_OK


def cmd_survey_r2m(args):
    count, stats = oracle.even_ring_unit_survey(args.m)
    expected = abgroup.AbelianGroup.from_cyclic_orders([2, args.m])
    payload = {
        "m": args.m,
        "count": count,
        "orders": {str(k): v for k, v in sorted(stats.items())},
        "matches_c2_x_cm": stats == expected.order_statistics(),
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_mersenne_check(args):
    payload = {
        "n_max": args.n_max,
        "no_perfect_powers": realize.mersenne_power_check(args.n_max),
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_report(args):
    from . import report

    summary = report.write_survey_report(args.limit, args.outdir)
    _emit(summary, args)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ringunits",
        description=(
            "Decide which cardinalities and odd-order abelian groups occur "
            "as the group of units of a commutative ring."
        ),
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=gf2poly.DEFAULT_SEED,
        help="seed for randomized factor splitting (answers never change)",
    )
    style = parser.add_mutually_exclusive_group()
    style.add_argument(
        "--json-compact",
        dest="json_pretty",
        action="store_false",
        help="single-line JSON output (default)",
    )
    style.add_argument(
        "--json-pretty", dest="json_pretty", action="store_true",
        help="indented JSON output",
    )
    parser.set_defaults(json_pretty=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realize", help="decide a cardinal number of units")
    p.add_argument("cardinal", help="decimal integer, 'inf', or 'aleph<k>'")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("realize-group", help="decide an abelian group of units")
    p.add_argument("group", help="cyclic orders, e.g. 'C3 x C9' or '3,9'")
    p.set_defaults(func=cmd_realize_group)

    p = sub.add_parser("pgroup", help="decide an abelian p-group of units")
    p.add_argument("p", type=int, help="the prime p")
    p.add_argument(
        "shape",
        help="bare exponent e for C_{p^e}, list '2,1' of exponents, or 'rN' "
        "for elementary abelian of rank N",
    )
    p.set_defaults(func=cmd_pgroup)

    p = sub.add_parser("factor-poly", help="factor a GF(2) polynomial")
    p.add_argument("hex", help="little-endian hex encoding of the coefficients")
    p.set_defaults(func=cmd_factor_poly)

    p = sub.add_parser(
        "tensor-split", help="split GF(2^a) (x) GF(2^b) into field factors"
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_tensor_split)

    p = sub.add_parser("verify", help="re-check a saved answer via the oracle")
    p.add_argument("witness_file", help="path to a JSON answer from this tool")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "survey-r2m", help="enumerate the units of Z[x]/(x^2, mx)"
    )
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_survey_r2m)

    p = sub.add_parser(
        "mersenne-check", help="confirm no 2^n - 1 is a perfect power"
    )
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_mersenne_check)

    p = sub.add_parser(
        "report", help="survey realizable odd counts: CSV plus figures"
    )
    p.add_argument("--limit", type=int, default=1 << 16)
    p.add_argument("--outdir", default="ringunits-report")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, UsageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResourceError as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
