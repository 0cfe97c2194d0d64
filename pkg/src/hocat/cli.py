"""Command-line front end.

Exit codes: 0 pass, 1 property failure, 2 invalid input, 3 refused (budget
or confluence).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .derived import (
    DerivedSetting, MissingQ, NoFactorization, PreconditionFailed, compare_KF, compare_KS,
    derive_F, derive_K_quillen, derive_S,
)
from .fincat import Budget, BudgetExceeded, FinCategory, Functor, validate_category
from .homotopy import build_ho, build_hok, compare_routes
from .instances import Instance
from .io import (
    InstanceError, category_to_dict, default_battery_dir, load_battery, load_functor,
    load_instance,
)
from .localization import (
    Battery, LocalizationWitness, classify, identity_witness, implication_violations,
    make_battery, rewriting_witness,
)
from .model import ModelInconsistency, validate_model
from .rewriting import NonConfluent

EXIT = {"pass": 0, "fail": 1, "invalid": 2, "refused": 3}


@dataclass
class RunConfig:
    instance: Path
    target_instance: Path | None = None
    functor: Path | None = None
    battery: Path | None = None
    budget: int = 10**7
    route: str = "ctilde"
    format: str = "text"

    def __post_init__(self):
        if self.budget <= 0:
            raise InstanceError("budget must be positive")
        for p in (self.instance, self.target_instance, self.functor):
            if p is not None and not Path(p).exists():
                raise InstanceError(f"{p} does not exist")


@dataclass
class Report:
    command: str
    verdict: str = "pass"
    results: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    timing: float = 0.0

    def fail(self, counterexample=None) -> None:
        self.verdict = "fail"
        if counterexample is not None:
            self.counterexamples.append(counterexample)

    def to_dict(self) -> dict:
        return {"command": self.command, "verdict": self.verdict, "results": self.results,
                "counterexamples": self.counterexamples, "timing": round(self.timing, 3)}


# ---------------------------------------------------------------- helpers


def category_summary(c: FinCategory) -> dict:
    return {
        "objects": c.n_obj,
        "morphisms": c.n_mor,
        "hom_sizes": {f"{c.obj_names[x]}->{c.obj_names[y]}": len(c.hom(x, y))
                      for x in c.objects for y in c.objects},
        "table": category_to_dict(c),
    }


def functor_table(F: Functor) -> dict:
    s, t = F.source, F.target
    return {"objects": {s.obj_names[x]: t.obj_names[F.ob(x)] for x in s.objects},
            "morphisms": {s.mor_names[f]: t.mor_names[F.ar(f)] for f in s.morphisms}}


def _components(eta, names_of: FinCategory, objs_of: FinCategory) -> dict:
    return {objs_of.obj_names[x]: names_of.mor_names[m]
            for x, m in zip(objs_of.objects, eta.components)}


def _model(inst: Instance, which: str = "instance"):
    if inst.model is None:
        raise InstanceError(f"{which} has no model structure")
    return inst.model


def _battery(cfg: RunConfig, wit: LocalizationWitness) -> Battery:
    directory = Path(cfg.battery) if cfg.battery else default_battery_dir()
    base = load_battery(directory)
    members = list(base.members) + [("loc", wit.loc), ("base", wit.base)]
    return make_battery(members, directory.name)


# --------------------------------------------------------------- commands


def cmd_validate(cfg: RunConfig) -> Report:
    rep = Report("validate")
    inst = load_instance(cfg.instance)
    rep.results["instance"] = inst.name
    if inst.model is not None:
        v = validate_model(inst.model)
        rep.results["kind"] = "model"
    else:
        v = validate_category(inst.cat)
        c = inst.cat
        missing = [c.mor_names[i] for i in c.ident if i not in inst.W]
        if missing:
            v.add("weak equivalences", "identities must be weak equivalences", tuple(missing))
        rep.results["kind"] = "category"
    rep.results["report"] = v.to_dict()
    if not v.ok:
        for viol in v.violations:
            rep.fail(viol.to_dict())
    return rep


def _witness_summary(wit: LocalizationWitness) -> dict:
    return {"name": wit.name, "functor": functor_table(wit.L)}


def cmd_build(cfg: RunConfig, which: str) -> Report:
    rep = Report(f"build {which}")
    inst = load_instance(cfg.instance)
    rep.results["instance"] = inst.name
    budget = Budget(cfg.budget)
    if which == "localize":
        wit = rewriting_witness(inst.cat, inst.W, budget)
        rep.results["category"] = category_summary(wit.loc)
        rep.results["witness"] = _witness_summary(wit)
        return rep
    md = _model(inst)
    if which == "hok":
        hok = build_hok(md)
        rep.results["category"] = category_summary(hok.cat)
        rep.results["witness"] = _witness_summary(hok.witness)
        return rep
    routes = ("ctilde", "q") if cfg.route == "both" else (cfg.route,)
    hos = {r: build_ho(md, r, budget) for r in routes}
    ho = hos[routes[0]]
    rep.results["category"] = category_summary(ho.cat)
    rep.results["witness"] = _witness_summary(ho.witness)
    if len(hos) == 2:
        cmp = compare_routes(hos["ctilde"], hos["q"], budget)
        rep.results["route_comparison"] = cmp
        if not cmp["ok"]:
            rep.fail({"route_comparison": "the two routes are not isomorphic"})
    return rep


def _classify_witness(inst: Instance, kind: str, budget: Budget, route: str):
    if kind == "auto":
        kind = "quillen" if inst.model is not None else "rewriting"
    if kind == "quillen":
        return build_ho(_model(inst), "q" if route == "q" else "ctilde", budget).witness
    if kind == "kan":
        return build_hok(_model(inst)).witness
    if kind == "rewriting":
        return rewriting_witness(inst.cat, inst.W, budget)
    if kind == "identity":
        return identity_witness(inst.cat)
    raise InstanceError(f"unknown witness kind {kind!r}")


def cmd_classify(cfg: RunConfig, witness: str = "auto") -> Report:
    rep = Report("classify")
    inst = load_instance(cfg.instance)
    budget = Budget(cfg.budget)
    wit = _classify_witness(inst, witness, budget, cfg.route)
    battery = _battery(cfg, wit)
    classify(wit, battery, budget)
    rep.results.update(
        instance=inst.name, witness=wit.name, battery=battery.id,
        flags={k: v.status for k, v in wit.flags.items()},
        evidence={k: v.to_dict() for k, v in wit.flags.items()})
    bad = implication_violations(wit)
    rep.results["implication_violations"] = bad
    if bad:
        rep.fail({"implications": bad})
    return rep


def _load_pair(cfg: RunConfig):
    src = load_instance(cfg.instance)
    tgt = load_instance(cfg.target_instance) if cfg.target_instance else src
    mdM, mdN = _model(src), _model(tgt, "target instance")
    if cfg.functor is None:
        raise InstanceError("--functor is required")
    F = load_functor(cfg.functor, mdM.cat, mdN.cat)
    return src, tgt, mdM, mdN, F


def cmd_derive(cfg: RunConfig, kind: str) -> Report:
    rep = Report(f"derive {kind}")
    src, tgt, mdM, mdN, F = _load_pair(cfg)
    rep.results.update(instance=src.name, target=tgt.name)
    st = DerivedSetting(mdM, mdN, Budget(cfg.budget))
    if kind == "k":
        routes = ("ctilde", "q") if cfg.route == "both" else (cfg.route,)
        for r in routes:
            res = derive_K_quillen(F, mdM, mdN, r, setting=st)
            d = st.hoN.cat
            rep.results[r] = {
                "functor": functor_table(res.functor),
                "counit": _components(res.transformation, d, mdM.cat),
                "certificate": {"complete": res.extras["certificate_complete"],
                                "rows": res.extras["certificate_rows"],
                                "functors": res.extras["certificate_functors"]},
            }
            if not res.extras["certificate_complete"]:
                rep.fail({"route": r, "certificate": res.extras["certificate_failure"]})
            if not res.extras["counit_natural"]:
                rep.fail({"route": r, "counit": "not natural"})
    elif kind == "f":
        res = derive_F(F, mdM, mdN, setting=st)
        sub = st.Mc[0]
        rep.results.update(
            functor=functor_table(res.functor),
            iota=_components(res.transformation, st.hokN.cat, sub),
            nu=_components(res.extras["nu"], st.hokN.cat, mdM.cat))
        for key in ("iota_iso", "nu_natural"):
            rep.results[key] = res.extras[key]
            if not res.extras[key]:
                rep.fail({key: False})
    else:
        res = derive_S(F, mdM, mdN, "Q", setting=st)
        rep.results.update(
            functor=functor_table(res.functor),
            HoF=functor_table(res.extras["HoF"]),
            HoQ=functor_table(res.extras["HoQ"]),
            nu=_components(res.transformation, st.hoN.cat, mdM.cat),
            localization_source=res.extras["loc_source"])
        for key in ("strict_equation", "composite_equals", "quasi_inverse_ok", "nu_natural",
                    "subcategory_agrees"):
            rep.results[key] = res.extras[key]
            if not res.extras[key]:
                rep.fail({key: False, "mismatches": res.extras.get("strict_mismatches")})
    return rep


def cmd_compare(cfg: RunConfig, pair: str) -> Report:
    rep = Report(f"compare {pair}")
    src, tgt, mdM, mdN, F = _load_pair(cfg)
    st = DerivedSetting(mdM, mdN, Budget(cfg.budget))
    v = (compare_KF if pair == "kf" else compare_KS)(F, mdM, mdN, setting=st)
    rep.results.update(instance=src.name, target=tgt.name, **v.to_dict())
    for k, ok in v.checks.items():
        if not ok:
            rep.fail({"check": k})
    return rep


# ------------------------------------------------------------------ main


def render_text(report: dict) -> str:
    lines = [f"{report['command']}: {report['verdict'].upper()}"]

    def walk(obj, indent):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v:
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}-")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}- {v}")

    results = dict(report["results"])
    cat = results.get("category")
    if isinstance(cat, dict):
        # the full table is only useful in JSON output
        results["category"] = {k: v for k, v in cat.items() if k != "table"}
    walk(results, 1)
    if report["counterexamples"]:
        lines.append("  counterexamples:")
        walk(report["counterexamples"], 2)
    lines.append(f"  timing: {report['timing']}s")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--instance", required=True, type=Path)
    common.add_argument("--target-instance", type=Path)
    common.add_argument("--functor", type=Path)
    common.add_argument("--battery", type=Path)
    common.add_argument("--budget", type=int, default=10**7)
    common.add_argument("--route", choices=("q", "ctilde", "both"), default="ctilde")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="hocat", description="Localizations, homotopy "
                                "categories and derived functors of finite model data.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common])
    b = sub.add_parser("build", parents=[common])
    b.add_argument("which", choices=("hok", "ho", "localize"))
    c = sub.add_parser("classify", parents=[common])
    c.add_argument("--witness", choices=("auto", "quillen", "kan", "rewriting", "identity"),
                   default="auto")
    d = sub.add_parser("derive", parents=[common])
    d.add_argument("kind", choices=("k", "f", "s"))
    m = sub.add_parser("compare", parents=[common])
    m.add_argument("pair", choices=("kf", "ks"))
    return p


def run(argv=None) -> tuple[int, dict]:
    return _run(build_parser().parse_args(argv))


def _run(args) -> tuple[int, dict]:
    start = time.perf_counter()
    sub = getattr(args, "which", None) or getattr(args, "kind", None) or getattr(args, "pair", None)
    label = f"{args.command} {sub}" if sub else args.command
    try:
        cfg = RunConfig(args.instance, args.target_instance, args.functor, args.battery,
                        args.budget, args.route, args.format)
        if args.command == "validate":
            rep = cmd_validate(cfg)
        elif args.command == "build":
            rep = cmd_build(cfg, args.which)
        elif args.command == "classify":
            rep = cmd_classify(cfg, args.witness)
        elif args.command == "derive":
            rep = cmd_derive(cfg, args.kind)
        else:
            rep = cmd_compare(cfg, args.pair)
    except (BudgetExceeded, NonConfluent) as e:
        rep = Report(label, "refused", {"reason": f"{type(e).__name__}: {e}"})
    except PreconditionFailed as e:
        rep = Report(label, "fail", {"reason": str(e)},
                     [{"weak_equivalence": e.counterexample}])
    except (ModelInconsistency, NoFactorization) as e:
        rep = Report(label, "fail", {"reason": f"{type(e).__name__}: {e}"})
    except (InstanceError, MissingQ, ValueError, OSError) as e:
        rep = Report(label, "invalid", {"reason": f"{type(e).__name__}: {e}"})
    rep.timing = time.perf_counter() - start
    return EXIT[rep.verdict], rep.to_dict()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, report = _run(args)
    if args.format == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
