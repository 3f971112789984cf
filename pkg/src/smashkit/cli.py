"""Command-line front end.

Every subcommand maps onto one library operation and prints either text or a
JSON envelope ``{"schema": 1, "command", "pass", "result"}``.  The exit
status is 0 when every check of the invoked report passes, 1 when some check
fails (or a verification cannot run, such as ``verify proof-identity`` on a
bialgebra without antipode) and 2 for bad input.

The default output format comes from ``SMASHKIT_OUTPUT`` (``text`` or
``json``).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import hopf, modalg, parser, qplane, seminorm, smash
from .kernel import AlgebraError, LinComb, Scalar, bilinear_extend
from .report import Report

OUTPUT_ENV = "SMASHKIT_OUTPUT"
DEFAULTS = {"hopf": "SweedlerH4", "module": "H4OnDualNumbers"}


class UsageError(ValueError):
    """Bad command-line input; reported with exit status 2."""


@dataclass
class RunConfig:
    command: str
    preset: str | None = None
    q: Scalar = Scalar(Fraction(1, 2))
    abs_q: Fraction | None = None
    rho: Fraction = Fraction(1)
    N: int = 3
    max_degree: int = 6
    depth: int = hopf.DEFAULT_DEPTH
    seed: int = 0
    count: int = 100
    family: str = "trunc"
    output: str = "text"
    exprs: list = field(default_factory=list)

    def __post_init__(self):
        if self.q.is_zero():
            raise UsageError("--q must be nonzero")
        if self.rho <= 0:
            raise UsageError("--rho must be positive")
        if self.abs_q is not None and self.abs_q <= 0:
            raise UsageError("--abs-q must be positive")

    def modulus(self) -> Fraction:
        """``|q|`` as an exact rational: ``--abs-q`` if given, else ``|q|``."""
        if self.abs_q is not None:
            return self.abs_q
        exact = seminorm.abs_value(self.q).exact
        if exact is None:
            raise UsageError(f"|{self.q}| is irrational; pass --abs-q")
        return exact


@dataclass
class Outcome:
    command: str
    passed: bool
    status: int
    result: dict
    text: str

    def to_json(self) -> dict:
        return {"schema": 1, "command": self.command, "pass": self.passed,
                "result": self.result}

    def render(self, output: str) -> str:
        if output == "json":
            return json.dumps(self.to_json(), indent=2, ensure_ascii=False)
        return self.text


# -- argument parsing --------------------------------------------------------


_SCALARS = parser.Context("scalars", LinComb.basis(""),
                          lambda u, v: bilinear_extend(lambda a, b: LinComb.basis(a + b), u, v),
                          {})


def parse_scalar(text: str) -> Scalar:
    """A Gaussian rational literal such as ``3/5``, ``-2`` or ``1/2+3/4*i``."""
    try:
        value = parser.evaluate(parser.parse(text), _SCALARS)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a scalar: {text!r} ({exc})") from None
    return value.coeff("")


def parse_positive(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help="Hopf or module-algebra preset name")
    common.add_argument("--q", type=parse_scalar, default=Scalar(Fraction(1, 2)),
                        help="deformation parameter, p/q or p/q+r/s*i (default 1/2)")
    common.add_argument("--abs-q", type=parse_positive, default=None,
                        help="exact modulus |q| for seminorms (default |q| when rational)")
    common.add_argument("--rho", type=parse_positive, default=Fraction(1))
    common.add_argument("--N", type=int, default=3)
    common.add_argument("--max-degree", type=int, default=6)
    common.add_argument("--depth", type=int, default=hopf.DEFAULT_DEPTH,
                        help="bound on |index| for sampled basis labels")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--count", type=int, default=100, help="number of random samples")
    common.add_argument("--family", default="trunc",
                        choices=("trunc", "envelope", "mixed", "weighted", "l1"))
    common.add_argument("--output", choices=("text", "json"),
                        default=os.environ.get(OUTPUT_ENV, "text"))

    top = argparse.ArgumentParser(prog="smashkit", description=__doc__.splitlines()[0])
    groups = top.add_subparsers(dest="group", required=True)

    def add(group, names: dict[str, tuple[str, str]]):
        sub = groups.add_parser(group).add_subparsers(dest="action", required=True)
        for name, (helptext, nargs) in names.items():
            p = sub.add_parser(name, parents=[common], help=helptext)
            if nargs:
                p.add_argument("exprs", nargs=nargs, metavar="EXPR")

    add("verify", {
        "hopf": ("Hopf/bialgebra axioms", ""),
        "module-algebra": ("module-algebra axioms", ""),
        "smash": ("embeddings, associativity and product forms", ""),
        "proof-identity": ("the antipode identity chain", ""),
    })
    add("smash", {"mul": ("multiply smash elements", "+")})
    add("qplane", {
        "normalize": ("normal form of a word expression", 1),
        "mul": ("multiply quantum-plane elements", "+"),
    })
    add("seminorm", {
        "eval": ("evaluate a seminorm", 1),
        "submult": ("check submultiplicativity on random pairs", ""),
    })
    add("stability", {"scan": ("scan the stability constants of h", "?")})
    add("demo", {"counterexample": ("the divergence witness table", "")})
    return top


def _as_list(exprs) -> list:
    if exprs is None:
        return []
    return [exprs] if isinstance(exprs, str) else list(exprs)


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=f"{ns.group} {ns.action}", preset=ns.preset, q=ns.q, abs_q=ns.abs_q,
        rho=ns.rho, N=ns.N, max_degree=ns.max_degree, depth=ns.depth, seed=ns.seed,
        count=ns.count, family=ns.family, output=ns.output,
        exprs=_as_list(getattr(ns, "exprs", None)),
    )


# -- helpers -----------------------------------------------------------------


def _module_spec(cfg: RunConfig) -> modalg.ModuleAlgebraSpec:
    try:
        return modalg.preset_module_algebra(cfg.preset or DEFAULTS["module"], cfg.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _contexts(spec: modalg.ModuleAlgebraSpec):
    H = spec.hopf.algebra
    a_ctx = parser.algebra_context(spec.algebra, spec.params.get("q"))
    h_ctx = parser.algebra_context(H, spec.params.get("q"), deltas=not H.generators)
    return a_ctx, h_ctx


def _parse(text: str):
    try:
        return parser.parse(text)
    except parser.ParseError as exc:
        raise UsageError(f"{text!r}: {exc}") from None


def _words(cfg: RunConfig, text: str) -> qplane.QPlaneElement:
    try:
        return qplane.normalize(parser.evaluate(_parse(text), parser.word_context(cfg.q)), cfg.q)
    except parser.EvalError as exc:
        raise UsageError(f"{text!r}: {exc}") from None


def _qplane_json(u: qplane.QPlaneElement) -> dict:
    return {"schema": 1, "q": u.q.to_json(),
            "terms": [{"coeff": c.to_json(), "i": i, "j": j} for (i, j), c in u.items()],
            "text": str(u)}


def _family(cfg: RunConfig) -> seminorm.SeminormFamily:
    SF = seminorm.SeminormFamily
    if cfg.family == "trunc":
        return SF.trunc(cfg.N)
    if cfg.family == "envelope":
        return SF.envelope(cfg.rho, cfg.modulus())
    if cfg.family == "mixed":
        return SF.mixed(cfg.rho, cfg.N)
    if cfg.family == "weighted":
        return SF.weighted(cfg.rho)
    return SF.weighted(1)


def _report_outcome(cfg: RunConfig, report: Report) -> Outcome:
    return Outcome(cfg.command, report.passed, 0 if report.passed else 1,
                   report.to_json(), report.to_text())


def _value_outcome(cfg: RunConfig, result: dict, text: str) -> Outcome:
    return Outcome(cfg.command, True, 0, result, text)


# -- subcommands -------------------------------------------------------------


def verify_hopf(cfg: RunConfig) -> Outcome:
    try:
        spec = hopf.preset_hopf(cfg.preset or DEFAULTS["hopf"])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _report_outcome(cfg, hopf.verify_hopf(spec, cfg.depth))


def verify_module_algebra(cfg: RunConfig) -> Outcome:
    spec = _module_spec(cfg)
    return _report_outcome(cfg, modalg.verify_module_algebra(spec, depth=cfg.depth))


def verify_smash(cfg: RunConfig) -> Outcome:
    spec = _module_spec(cfg)
    rng = random.Random(cfg.seed)
    sample = lambda: smash.random_smash_element(spec, rng, depth=min(cfg.depth, 3))
    triples = [(sample(), sample(), sample()) for _ in range(cfg.count)]
    report = smash.verify_embeddings(spec)
    report.extend(smash.verify_associativity(spec, triples))
    report.extend(smash.verify_product_forms(spec, [(u, v) for u, v, _ in triples]))
    return _report_outcome(cfg, report)


def verify_proof_identity(cfg: RunConfig) -> Outcome:
    spec = _module_spec(cfg)
    report = smash.verify_proof_identity(spec, h_depth=min(cfg.depth, 5),
                                         a_depth=cfg.max_degree)
    return _report_outcome(cfg, report)


def smash_mul(cfg: RunConfig) -> Outcome:
    spec = _module_spec(cfg)
    a_ctx, h_ctx = _contexts(spec)
    try:
        factors = [parser.evaluate_smash(_parse(e), a_ctx, h_ctx) for e in cfg.exprs]
    except parser.EvalError as exc:
        raise UsageError(str(exc)) from None
    product = smash.smash_product(spec, *factors)
    text = smash.render(spec, product)
    return _value_outcome(cfg, {**smash.to_json(product), "text": text}, text)


def qplane_normalize(cfg: RunConfig) -> Outcome:
    u = _words(cfg, cfg.exprs[0])
    return _value_outcome(cfg, _qplane_json(u), str(u))


def qplane_mul(cfg: RunConfig) -> Outcome:
    elements = [_words(cfg, e) for e in cfg.exprs]
    product = elements[0]
    for v in elements[1:]:
        product = qplane.qplane_mul(product, v)
    return _value_outcome(cfg, _qplane_json(product), str(product))


def seminorm_eval(cfg: RunConfig) -> Outcome:
    f = _family(cfg)
    u = _words(cfg, cfg.exprs[0])
    try:
        value = f(u)
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    return _value_outcome(cfg, {"schema": 1, "family": str(f), **value.to_json()}, str(value))


def seminorm_submult(cfg: RunConfig) -> Outcome:
    f = _family(cfg)
    rng = random.Random(cfg.seed)
    one_variable = f.kind in ("trunc", "weighted")

    def sample():
        u = qplane.random_element(rng, cfg.q, degree=cfg.max_degree // 2)
        if one_variable:
            u = qplane.QPlaneElement(LinComb((m, c) for m, c in u.items() if m[1] == 0), cfg.q)
        return u

    pairs = [(sample(), sample()) for _ in range(cfg.count)]
    return _report_outcome(cfg, seminorm.check_submultiplicative(f, pairs))


def stability_scan(cfg: RunConfig) -> Outcome:
    spec = _module_spec(cfg) if cfg.preset else modalg.q_dilation(cfg.q)
    _, h_ctx = _contexts(spec)
    source = cfg.exprs[0] if cfg.exprs else "d(1)"
    try:
        h = parser.evaluate(_parse(source), h_ctx)
    except parser.EvalError as exc:
        raise UsageError(str(exc)) from None
    scan = seminorm.stability_scan(spec, _family(cfg), h, cfg.max_degree)
    return _value_outcome(cfg, scan.to_json(), scan.to_text())


def demo_counterexample(cfg: RunConfig) -> Outcome:
    """Witness table plus checks of its two defining behaviours."""
    abs_q = cfg.modulus()
    table = seminorm.witness_divergence(abs_q, cfg.rho, cfg.N, cfg.max_degree)
    report = Report("witness")
    for D in range(cfg.N, cfg.max_degree + 1):
        report.record("mixed-constant", [f"D={D}"], table.mixed(D).exact,
                      table.mixed(cfg.N).exact)
    for D in range(cfg.max_degree + 1):
        report.record_le("envelope-growth", [f"D={D}"], abs_q ** (-D * D) * cfg.rho ** D,
                         table.envelope(D).exact)
    text = table.to_text() + "\n" + report.to_text()
    return Outcome(cfg.command, report.passed, 0 if report.passed else 1,
                   {"table": table.to_json(), "report": report.to_json()}, text)


COMMANDS = {
    "verify hopf": verify_hopf,
    "verify module-algebra": verify_module_algebra,
    "verify smash": verify_smash,
    "verify proof-identity": verify_proof_identity,
    "smash mul": smash_mul,
    "qplane normalize": qplane_normalize,
    "qplane mul": qplane_mul,
    "seminorm eval": seminorm_eval,
    "seminorm submult": seminorm_submult,
    "stability scan": stability_scan,
    "demo counterexample": demo_counterexample,
}


def run(cfg: RunConfig) -> Outcome:
    """Dispatch one subcommand.  Raises UsageError for bad input and
    :class:`~smashkit.hopf.NoAntipodeError` when an antipode is required."""
    return COMMANDS[cfg.command](cfg)


def _error(cfg: RunConfig | None, command: str, message: str, status: int,
           stdout, stderr) -> int:
    print(message, file=stderr)
    if cfg is not None and cfg.output == "json":
        print(json.dumps({"schema": 1, "command": command, "pass": False,
                          "result": {"error": message}}, indent=2), file=stdout)
    return status


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ns = build_parser().parse_args(argv)
    command = f"{ns.group} {ns.action}"
    cfg = None
    try:
        cfg = config_from_args(ns)
        outcome = run(cfg)
    except hopf.NoAntipodeError as exc:
        return _error(cfg, command, str(exc), 1, stdout, stderr)
    except (UsageError, AlgebraError) as exc:
        return _error(cfg, command, f"error: {exc}", 2, stdout, stderr)
    print(outcome.render(cfg.output), file=stdout)
    return outcome.status


if __name__ == "__main__":
    sys.exit(main())
