"""Command-line interface: ``hermes {params,encode,decode,interpolate,simulate}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import choose_params
from .code import make_code
from .decode import list_decode
from .errors import ParameterError
from .hermitian import deg_u
from .interp import interpolate
from .simulate import SimConfig, run_simulation


def _code_args(p):
    p.add_argument("--q", type=int, required=True, help="field is GF(q^2)")
    p.add_argument("--u", type=int, required=True, help="code C_u, 0 < u < q^3")


def _dec_args(p):
    p.add_argument("--m", type=int, required=True, help="multiplicity")
    p.add_argument("--l", type=int, default=None, help="list size (default: from bounds)")


def _received(code, text):
    v = code.F.parse_vector(text)
    if len(v) != code.n:
        raise ParameterError(f"received word has {len(v)} symbols, expected n={code.n}")
    return v


def _default_l(code, m, l):
    return l if l is not None else max(m, choose_params(code, m).l)


def cmd_params(a, out):
    code = make_code(a.q, a.u)
    data = {"q": code.q, "u": code.u, "n": code.n, "k": code.k, "g": code.g, "basis": code.basis_text()}
    if a.m is not None:
        p = choose_params(code, a.m)
        data.update(m=p.m, N=p.N, w=p.w, l=p.l, tau=p.tau)
    if a.json:
        print(json.dumps(data), file=out)
        return
    head = f"n={code.n} k={code.k} g={code.g}"
    if a.m is not None:
        head += f" N={data['N']} w={data['w']} l={data['l']} tau={data['tau']}"
    print(head, file=out)
    print("basis: " + ", ".join(data["basis"]), file=out)


def cmd_encode(a, out):
    code = make_code(a.q, a.u)
    cw, mu = code.encode(code.F.parse_vector(a.message))
    if a.json:
        print(json.dumps({"codeword": code.F.format_vector(cw), "message_function": str(mu)}), file=out)
    else:
        print(code.F.format_vector(cw), file=out)


def cmd_decode(a, out):
    code = make_code(a.q, a.u)
    F = code.F
    v = _received(code, a.received)
    res = list_decode(code, v, a.m, _default_l(code, a.m, a.l))
    if a.json:
        data = {
            "Q": str(res.Q),
            "l": res.l,
            "guarantee_radius": str(res.guarantee_radius),
            "entries": [
                {"message": F.format_vector(e.message), "codeword": F.format_vector(e.codeword), "distance": e.distance}
                for e in res.entries
            ],
        }
        if a.stats:
            data["mult_count"] = res.stats.mult_count
        print(json.dumps(data), file=out)
        return
    print(f"Q = {res.Q}", file=out)
    for e in res.entries:
        print(f"{F.format_vector(e.message)} | {F.format_vector(e.codeword)} | {e.distance}", file=out)
    if a.stats:
        print(f"mult_count={res.stats.mult_count} radius={res.guarantee_radius}", file=out)


def cmd_interpolate(a, out):
    code = make_code(a.q, a.u)
    v = _received(code, a.received)
    l = _default_l(code, a.m, a.l)
    Q, st = interpolate(code, v, a.m, l)
    if a.json:
        data = {"Q": str(Q), "l": l, "deg_u": deg_u(Q, code.u)}
        if a.stats:
            data.update(mult_count=st.mult_count, updates=st.updates, counter_bound=st.counter_bound)
        print(json.dumps(data), file=out)
        return
    print(f"Q = {Q}", file=out)
    if a.stats:
        print(f"mult_count={st.mult_count} updates={st.updates} counter_bound={st.counter_bound}", file=out)


def cmd_simulate(a, out):
    seed = a.seed if a.seed is not None else int(os.environ.get("HERMES_SEED", "0"))
    cfg = SimConfig(q=a.q, u=a.u, m=a.m, l=a.l, errors=a.errors, trials=a.trials, seed=seed, stats=a.stats, jobs=a.jobs)
    rep = run_simulation(cfg)
    if a.json:
        print(json.dumps({"seed": seed, **rep.to_dict()}), file=out)
        return
    print(f"trials={rep.trials} successes={rep.successes} failures={rep.failures} "
          f"success_rate={rep.success_rate:.4f} mean_list_size={rep.mean_list_size:.3f} l={rep.l} tau={rep.tau}",
          file=out)
    if rep.mean_mult_count is not None:
        print(f"mean_mult_count={rep.mean_mult_count:.1f}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermes", description="List decoding of Hermitian codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="code and decoder parameters")
    _code_args(p)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("encode", help="encode a message")
    _code_args(p)
    p.add_argument("--message", required=True, help="comma-separated field tokens")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="list-decode a received word")
    _code_args(p)
    _dec_args(p)
    p.add_argument("--received", required=True)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("interpolate", help="compute the Q-polynomial")
    _code_args(p)
    _dec_args(p)
    p.add_argument("--received", required=True)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("simulate", help="Monte Carlo decoding experiment")
    _code_args(p)
    _dec_args(p)
    p.add_argument("--errors", type=int, required=True, help="exact number of symbol errors per trial")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=None, help="overrides $HERMES_SEED (default 0)")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    for name in ("params", "encode", "decode", "interpolate", "simulate"):
        sub.choices[name].add_argument("--json", action="store_true", help="machine-readable output")
    parser.subcommands = sub.choices
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except (ParameterError, ValueError) as exc:
        sys.stderr.write(parser.subcommands[args.command].format_usage())
        print(f"hermes {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
