"""Command-line front end: ``niep <verb> [flags]``.

Exit codes: 0 success, 1 domain failure (failed precondition, failed
condition check or failed certificate), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import construct as C
from .errors import NIEPError
from .matrix import (complex_eigvec_pair, eigenvalues, matrix_from_json, matrix_to_csv,
                     matrix_to_json, normalize_perron, with_real_eigvec)
from .spectra import Spectrum, check_necessary
from .verify import certify

JSON_DIGITS = 12
HUMAN_DIGITS = 6


def _num(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x == 0:
        return 0.0 if x == 0 else x
    return float(f"{x:.{JSON_DIGITS}g}")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [_num(obj.real), _num(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    return obj


def _h(x) -> str:
    """Human formatting of a real or complex number."""
    z = complex(x)
    if z.imag == 0:
        return f"{z.real:.{HUMAN_DIGITS}g}"
    return f"{z.real:.{HUMAN_DIGITS}g}{z.imag:+.{HUMAN_DIGITS}g}i"


def _h_obj(obj) -> str:
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{k}: {_h_obj(v)}" for k, v in sorted(obj.items())) + "}"
    if isinstance(obj, (bool, np.bool_, str)):
        return str(obj)
    if isinstance(obj, (int, float, complex, np.number)):
        return _h(obj)
    return str(obj)


def _spec_str(values) -> str:
    return "(" + ", ".join(_h(z) for z in values) + ")"


def _matrix_str(M) -> str:
    return "\n".join("  " + "  ".join(f"{x:>{HUMAN_DIGITS + 6}.{HUMAN_DIGITS}g}" for x in row)
                     for row in np.asarray(M))


class Report:
    """Collects (label, value) pairs for human output and the JSON document."""

    def __init__(self, verb: str):
        self.doc: dict = {"verb": verb}
        self.lines: list[str] = []

    def add(self, key: str, value, human: str | None = None):
        self.doc[key] = value
        if human is None:
            if isinstance(value, (float, int, complex, np.floating)) and not isinstance(value, bool):
                human = _h(value)
            else:
                human = str(value)
        self.lines.append(f"{key}: {human}")

    def add_spectrum(self, key: str, sigma):
        values = list(sigma)
        self.add(key, [complex(z) for z in values], _spec_str(values))

    def add_matrix(self, key: str, M):
        self.doc[key] = matrix_to_json(M)
        self.lines.append(f"{key}:\n{_matrix_str(M)}")

    def add_certificate(self, cert):
        self.doc["certificate"] = cert.to_json()
        status = "PASS" if cert.passed else "FAIL"
        self.lines.append(f"certificate: {status} (min entry {_h(cert.min_entry)}, "
                          f"spectral residual {cert.spectral_residual:.3g}, {cert.theorem})")

    def emit(self, args, stream=None):
        stream = stream or sys.stdout
        if args.json:
            stream.write(json.dumps(_jsonable(self.doc), sort_keys=True) + "\n")
        else:
            stream.write("\n".join(self.lines) + "\n")


def _load(path: str):
    text = Path(path).read_text()
    return json.loads(text)


def _spectrum_arg(args, required=True) -> Spectrum | None:
    if args.spectrum is not None:
        return Spectrum.from_json(args.spectrum)
    if getattr(args, "in_path", None) and getattr(args, "_in_is_spectrum", True):
        return Spectrum.from_json(_load(args.in_path))
    if required:
        raise UsageError("a spectrum is required (--spectrum or --in)")
    return None


def _matrix_arg(args, required=True):
    if getattr(args, "matrix", None) is not None:
        return matrix_from_json(args.matrix)
    if getattr(args, "in_path", None):
        return matrix_from_json(_load(args.in_path))
    if required:
        raise UsageError("a matrix is required (--matrix or --in)")
    return None


def _tail(args) -> list[float]:
    if not args.tail:
        return []
    return [float(x) for x in args.tail.split(",") if x.strip()]


def _write_matrix(args, M):
    if not args.out:
        return
    path = Path(args.out)
    if path.suffix.lower() == ".csv":
        path.write_text(matrix_to_csv(M))
    else:
        path.write_text(json.dumps(_jsonable(matrix_to_json(M))) + "\n")


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


# verbs -------------------------------------------------------------------

def cmd_check(args) -> int:
    sigma = _spectrum_arg(args)
    rep = check_necessary(sigma, args.mmax, args.tol)
    out = Report("check")
    out.add_spectrum("spectrum", sigma)
    for key in ("closed", "perron_ok", "trace_sums_ok", "jll_ok"):
        out.add(key, getattr(rep, key))
    out.add("m_max", rep.m_max)
    out.add("details", rep.details, _h_obj(rep.details))
    out.add("all_ok", rep.all_ok)
    out.emit(args)
    return 0 if rep.all_ok else 1


def cmd_realize(args) -> int:
    sigma = _spectrum_arg(args)
    b1 = args.b1 if args.b1 is not None else 0.0
    g, gamma = C.ls_companion(sigma, b1, args.tol)
    M = C.ls_realize(sigma, b1, args.tol)
    cert = certify(M, sigma, theorem="companion-plus-scalar realisation")
    out = Report("realize")
    out.add("b1", b1)
    out.add("gamma", gamma)
    out.add("companion_b", list(g.b), _spec_str(g.b))
    out.add_matrix("matrix", M)
    out.add_certificate(cert)
    out.emit(args)
    _write_matrix(args, M)
    return 0 if cert.passed else 1


def cmd_replace2(args) -> int:
    _need(args, "rho", "lambda2", "b1")
    res = C.p2_companion_replace(args.rho, args.lambda2, args.b1, _tail(args), args.tol)
    out = Report("replace2")
    out.add("gamma", res.params.gamma)
    out.add("b2", res.params.b2)
    out.add("w", res.w.to_json(), str(res.w))
    out.add_spectrum("mu", res.mu)
    out.add_matrix("mprime", res.matrix)
    out.emit(args)
    _write_matrix(args, res.matrix)
    return 0


def cmd_replace2_mu(args) -> int:
    _need(args, "rho", "lambda2")
    mu = _spectrum_arg(args)
    delta = args.delta if args.delta is not None else 0.0
    res = C.p2_mu_replace(args.rho, args.lambda2, len(mu), delta, mu, args.tol)
    cert = certify(res.matrix, res.mu, theorem="p=2 replacement by a prescribed list")
    out = Report("replace2-mu")
    out.add("b1", res.params.b1)
    out.add("gamma", res.params.gamma)
    out.add("b2", res.params.b2)
    out.add_spectrum("mu", res.mu)
    out.add_matrix("mprime", res.matrix)
    out.add_certificate(cert)
    out.emit(args)
    _write_matrix(args, res.matrix)
    return 0 if cert.passed else 1


def cmd_replace3(args) -> int:
    _need(args, "rho", "alpha", "beta")
    out = Report("replace3")
    lam_p, lam_m, tag = C.p3_lambda_limits(args.rho, args.alpha, args.beta, args.tol)
    if args.closed_form:
        _need(args, "s")
        sigma = C.p3_closed_form(args.rho, args.alpha, args.beta, args.s, args.tol)
        out.add("s", args.s)
        out.add("a", lam_p)
        out.add("t", C.p3_t_for_perron(args.rho, args.alpha, args.beta, lam_p, args.s))
        out.add_spectrum("roots", sigma)
    else:
        a = args.a if args.a is not None else 0.0
        eta = args.eta if args.eta is not None else 1.0
        if args.t is None:
            _need(args, "s")
            t = C.p3_t_for_perron(args.rho, args.alpha, args.beta, a, args.s)
        else:
            t = args.t
        q, sigma = C.p3_replace(args.rho, args.alpha, args.beta, a, t, eta)
        out.add("a", a)
        out.add("t", t)
        out.add("eta", eta)
        out.add("q", q.to_json(), str(q))
        out.add_spectrum("roots", sigma)
    out.add("root_sum", sum(sigma).real)
    out.add("lambda_plus", lam_p)
    out.add("lambda_minus", lam_m)
    out.add("region", str(tag))
    out.emit(args)
    return 0


def cmd_lambda_limits(args) -> int:
    _need(args, "rho", "alpha", "beta")
    lam_p, lam_m, tag = C.p3_lambda_limits(args.rho, args.alpha, args.beta, args.tol)
    out = Report("lambda-limits")
    out.add("lambda_plus", lam_p)
    out.add("lambda_minus", lam_m)
    out.add("region", tag.region.value)
    out.add("boundary", sorted(tag.boundary), ", ".join(sorted(tag.boundary)) or "none")
    out.add("holds", tag.holds, json.dumps(tag.holds, sort_keys=True))
    out.emit(args)
    return 0


def cmd_cubic(args) -> int:
    _need(args, "rho", "lambda2")
    a = args.a if args.a is not None else 0.0
    t1 = args.t1 if args.t1 is not None else 0.0
    t2 = args.t2 if args.t2 is not None else 0.0
    w, mu = C.cubic_replace(args.rho, args.lambda2, a, t1, t2, args.tol)
    out = Report("cubic")
    out.add("w", w.to_json(), str(w))
    out.add_spectrum("mu", mu)
    out.emit(args)
    return 0


def cmd_glue(args) -> int:
    B = _matrix_arg(args)
    es = normalize_perron(B)
    sigmaB = eigenvalues(es.B)
    out = Report("glue")
    out.add("rho", es.rho)
    if args.p == 2:
        _need(args, "lambda2", "b1")
        es = with_real_eigvec(es, args.lambda2)
        res = C.p2_companion_replace(es.rho, args.lambda2, args.b1, _tail(args), args.tol)
        N = C.glue(es, res.matrix, p=2, tol=args.tol)
        target = list(res.mu) + list(C.remove_values(sigmaB, [es.rho, args.lambda2]))
        out.add_spectrum("mu", res.mu)
    elif args.p == 3:
        _need(args, "alpha", "beta")
        a = args.a if args.a is not None else 0.0
        t = args.t if args.t is not None else 0.0
        es = complex_eigvec_pair(es, args.alpha, args.beta, eta=args.eta or 1.0)
        _, mu = C.p3_replace(es.rho, args.alpha, args.beta, a, t, es.eta)
        N = C.glue(es, p=3, a=a, t=t, tol=args.tol)
        pair = [complex(args.alpha, args.beta), complex(args.alpha, -args.beta)]
        target = list(mu) + list(C.remove_values(sigmaB, [es.rho] + pair))
        out.add("eta", es.eta)
        out.add_spectrum("mu", mu)
    else:
        raise UsageError("glue supports --p 2 or --p 3 from the command line")
    cert = certify(N, target, theorem=f"bordering construction p={args.p}")
    out.add_matrix("matrix", N)
    out.add_certificate(cert)
    out.emit(args)
    _write_matrix(args, N)
    return 0 if cert.passed else 1


def cmd_certify(args) -> int:
    M = _matrix_arg(args)
    if args.spectrum is None:
        raise UsageError("--spectrum (the target) is required")
    target = Spectrum.from_json(args.spectrum)
    cert = certify(M, target, theorem=args.theorem or "")
    out = Report("certify")
    out.add_certificate(cert)
    out.emit(args)
    return 0 if cert.passed else 1


SWEEP_PARAMS = ("t", "s", "delta", "b1")


def _sweep_points(args):
    chosen = [p for p in SWEEP_PARAMS
              if getattr(args, f"{p}_from") is not None or getattr(args, f"{p}_to") is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one range: --t-from/--t-to, --s-*, --delta-* or --b1-*")
    name = chosen[0]
    lo, hi = getattr(args, f"{name}_from"), getattr(args, f"{name}_to")
    if lo is None or hi is None:
        raise UsageError(f"--{name}-from and --{name}-to are both required")
    if args.steps is None or args.steps < 1:
        raise UsageError("--steps must be a positive integer")
    return name, np.linspace(lo, hi, args.steps)


def _sweep_eval(args, name: str, value: float):
    target = args.target
    if target == "replace3":
        _need(args, "rho", "alpha", "beta")
        a = args.a if args.a is not None else 0.0
        eta = args.eta if args.eta is not None else 1.0
        if name == "t":
            t = value
        elif name == "s":
            t = C.p3_t_for_perron(args.rho, args.alpha, args.beta, a, value)
        else:
            raise UsageError("replace3 sweeps over t or s")
        return list(C.p3_replace(args.rho, args.alpha, args.beta, a, t, eta)[1])
    if target == "replace2":
        _need(args, "rho", "lambda2")
        if name != "b1":
            raise UsageError("replace2 sweeps over b1")
        return list(C.p2_companion_replace(args.rho, args.lambda2, value, _tail(args), args.tol).mu)
    if target in ("guo", "guo-guo"):
        if name != "delta":
            raise UsageError(f"{target} sweeps over delta")
        sigma = _spectrum_arg(args)
        if target == "guo":
            return list(C.guo_perturb(sigma, value, -1 if args.minus else 1))
        return list(C.guo_guo_perturb(sigma, value, "increase" if args.increase else "decrease"))
    raise UsageError(f"unknown sweep target {target!r}")


def cmd_sweep(args) -> int:
    name, points = _sweep_points(args)
    rows = [(v, _sweep_eval(args, name, float(v))) for v in points]
    width = max(len(r) for _, r in rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = [name]
    for k in range(1, width + 1):
        header += [f"root{k}_re", f"root{k}_im"]
    writer.writerow(header)
    for v, roots in rows:
        row = [repr(_num(v))]
        for z in roots:
            row += [repr(_num(z.real)), repr(_num(z.imag))]
        writer.writerow(row)
    text = buf.getvalue()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


COMMANDS = {
    "check": cmd_check,
    "realize": cmd_realize,
    "replace2": cmd_replace2,
    "replace2-mu": cmd_replace2_mu,
    "replace3": cmd_replace3,
    "lambda-limits": cmd_lambda_limits,
    "cubic": cmd_cubic,
    "glue": cmd_glue,
    "sweep": cmd_sweep,
    "certify": cmd_certify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spectrum", help="inline spectrum JSON, [[re, im], ...]")
    common.add_argument("--in", dest="in_path", help="read spectrum or matrix JSON from a file")
    common.add_argument("--matrix", help="inline matrix JSON, {\"n\": n, \"rows\": [...]} or [[...]]")
    common.add_argument("--out", help="write the resulting matrix (.json or .csv) or sweep CSV")
    common.add_argument("--json", action="store_true", help="emit the machine-readable document")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--mmax", type=int)
    for flag in ("rho", "lambda2", "alpha", "beta", "a", "t", "eta", "s", "b1", "delta", "t1", "t2"):
        common.add_argument(f"--{flag}", type=float)
    common.add_argument("--tail", help="comma-separated b3,...,bn")
    common.add_argument("--p", type=int, choices=(1, 2, 3), default=2)
    common.add_argument("--closed-form", action="store_true",
                        help="replace3: use the closed form at --s (a = lambda_+)")
    common.add_argument("--theorem", help="certify: label stored in the certificate")

    parser = argparse.ArgumentParser(prog="niep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in COMMANDS:
        p = sub.add_parser(verb, parents=[common])
        if verb == "sweep":
            p.add_argument("target", choices=("replace3", "replace2", "guo", "guo-guo"))
            for name in SWEEP_PARAMS:
                p.add_argument(f"--{name}-from", type=float)
                p.add_argument(f"--{name}-to", type=float)
            p.add_argument("--steps", type=int)
            p.add_argument("--minus", action="store_true", help="guo: lambda2 - delta")
            p.add_argument("--increase", action="store_true", help="guo-guo: increasing variant")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        parser.error(str(exc))
    except NIEPError as exc:
        print(f"error [{exc.tag}]: {exc}", file=sys.stderr)
        return 1
    except (ValueError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
