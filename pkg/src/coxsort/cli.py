"""Command-line front end: ``coxsort {sort,poset,check,sortables,convexity}``.

Exit status is 0 when every requested check passes, 1 when a check fails
and 2 on usage or input errors (malformed input, cap exceeded, element not
in W_omega, non-reduced prefix).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .convexity import (
    ClosureOperator,
    complement_system,
    is_accessible,
    is_antimatroid,
    is_supersolvable_antimatroid,
    members,
    parse_set_system,
    satisfies_antiexchange,
    supersolvable_orders,
)
from .coxeter import CoxeterSystem, create_system, format_word, parse_matrix_text, parse_word, preset
from .cyclic import (
    catalan_number,
    census_to_json,
    check_coxeter_word,
    enumerate_sortables,
    sortable_census,
    sortable_lattice,
    sortable_report,
)
from .lattice import build_lattice_from_family, is_join_distributive, is_sn_el_labelling, lattice_to_dot
from .permutations import parse_permutation, permutation_element
from .sorting_order import (
    DEFAULT_ELEMENT_CAP,
    build_sorting_order,
    build_truncated_infinite,
    compare_orders,
    sorting_order_to_dot,
    sorting_order_to_json,
    verify_maximality,
)
from .subwords import DEFAULT_WORD_CAP, SortingWord, sort_element

__all__ = ["RunConfig", "parse_config", "dispatch", "main"]

COMMANDS = ("sort", "poset", "check", "sortables", "convexity")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    type_name: str | None = None
    matrix_path: str | None = None
    word: str | None = None
    element: str | None = None
    subword: str | None = None
    coxeter_word: str | None = None
    file: str | None = None
    format: str = "text"
    out: str | None = None
    cap: int = DEFAULT_WORD_CAP
    element_cap: int = DEFAULT_ELEMENT_CAP
    census: bool = False
    truncate: int | None = None
    order_search: bool = False
    samples: int = 200
    seed: int = 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxsort", description="Sorting orders on Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def system_args(sp, required=True):
        g = sp.add_mutually_exclusive_group(required=required)
        g.add_argument("--type", dest="type_name", help="preset such as A4, B3, H3, I2:4, I2:inf")
        g.add_argument("--matrix", dest="matrix_path", help="Coxeter matrix file")

    def common(sp):
        sp.add_argument("--format", choices=("text", "json", "dot"), default="text")
        sp.add_argument("--out", help="write the artifact here instead of stdout")
        sp.add_argument("--cap", type=int, default=DEFAULT_WORD_CAP, help="maximum sorting word length")
        sp.add_argument("--element-cap", type=int, default=DEFAULT_ELEMENT_CAP)

    sp = sub.add_parser("sort", help="sorted subword of an element")
    system_args(sp)
    sp.add_argument("--word", required=True, help="sorting word omega, e.g. 1234323212 or 1,2,3")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--element", help="one-line permutation (type A presets)")
    g.add_argument("--subword", help="positions of omega, e.g. 2,3,4")
    common(sp)

    sp = sub.add_parser("poset", help="build and export the sorting order")
    system_args(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--truncate", type=int, help="use the length-N prefix of word repeated forever")
    common(sp)

    sp = sub.add_parser("check", help="full invariant suite on one sorting word")
    system_args(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--samples", type=int, default=200, help="random subsets for maximality")
    sp.add_argument("--seed", type=int, default=0)
    common(sp)

    sp = sub.add_parser("sortables", help="c-sortable elements, counts and census")
    system_args(sp)
    sp.add_argument("--coxeter-word", help="Coxeter word c (default 1..n)")
    sp.add_argument("--census", action="store_true", help="classify all Coxeter words")
    common(sp)

    sp = sub.add_parser("convexity", help="set-system checks on a file")
    sp.add_argument("--file", required=True)
    sp.add_argument("--order-search", action="store_true", help="search all ground orders for supersolvability")
    common(sp)
    return p


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse argv; argparse exits with status 2 on usage errors."""
    ns = _parser().parse_args(argv)
    cfg = RunConfig(command=ns.command)
    for key in vars(ns):
        if hasattr(cfg, key):
            setattr(cfg, key, getattr(ns, key))
    if cfg.truncate is not None and cfg.truncate < 0:
        raise UsageError("--truncate must be nonnegative")
    if cfg.census and cfg.coxeter_word:
        raise UsageError("--census and --coxeter-word are mutually exclusive")
    return cfg


def _system(cfg: RunConfig) -> CoxeterSystem:
    if cfg.type_name:
        return preset(cfg.type_name)
    text = Path(cfg.matrix_path).read_text()
    return create_system(parse_matrix_text(text), name=Path(cfg.matrix_path).stem)


def _word(cfg: RunConfig, sys_: CoxeterSystem) -> SortingWord:
    letters = parse_word(cfg.word, sys_.n)
    if cfg.truncate is not None:
        if not letters:
            raise UsageError("--truncate needs a nonempty word")
        letters = tuple(letters[i % len(letters)] for i in range(cfg.truncate))
    if len(letters) > cfg.cap:
        raise UsageError(f"sorting word length {len(letters)} exceeds the cap {cfg.cap}")
    return SortingWord(sys_, letters)


def _flag(ok: bool) -> str:
    return "yes" if ok else "no"


def _cmd_sort(cfg: RunConfig):
    sys_ = _system(cfg)
    word = _word(cfg, sys_)
    if cfg.element is not None:
        u = permutation_element(sys_, parse_permutation(cfg.element))
    else:
        idx = parse_word(cfg.subword)
        u = word.subword(idx).element()
    alpha = sort_element(word, u)
    index_set = "{" + ",".join(map(str, alpha.indices)) + "}"
    if cfg.format == "json":
        text = json.dumps({"index_set": list(alpha.indices), "word": list(alpha.letters)}) + "\n"
    elif cfg.format == "dot":
        raise UsageError("sort has no DOT output")
    else:
        text = f"{index_set}\n{format_word(alpha.letters)}\n"
    return text, True


def _order_checks(so) -> dict[str, bool]:
    report = is_antimatroid(so.family)
    jd = is_join_distributive(so.lattice)
    return {
        "antimatroid": bool(report),
        "supersolvable_antimatroid": is_supersolvable_antimatroid(so.family),
        "join_distributive": bool(jd),
        "graded_by_length": all(so.lattice.rank[i] == u.length for i, u in enumerate(so.elements)),
    }


def _summary_lines(so, checks: dict[str, bool]) -> list[str]:
    lat = so.lattice
    lines = [
        f"sorting word: {format_word(so.word.letters)}",
        f"elements: {len(lat)}",
        f"covers: {len(lat.covers)}",
        f"height: {lat.height}",
    ]
    lines += [f"{k}: {_flag(v)}" for k, v in checks.items()]
    return lines


def _cmd_poset(cfg: RunConfig):
    sys_ = _system(cfg)
    word = _word(cfg, sys_)
    if cfg.truncate is not None:
        so, trunc = build_truncated_infinite(sys_, word.letters, cfg.cap)
        checks = _order_checks(so)
        checks["is_lattice"] = trunc.is_lattice
        checks["intervals_join_distributive"] = trunc.intervals_join_distributive
        checks["intervals_supersolvable"] = trunc.intervals_supersolvable
    else:
        so = build_sorting_order(word, cfg.cap, cfg.element_cap)
        checks = _order_checks(so)
    if cfg.format == "json":
        doc = json.loads(sorting_order_to_json(so))
        doc["checks"] = checks
        text = json.dumps(doc, indent=2) + "\n"
    elif cfg.format == "dot":
        text = sorting_order_to_dot(so)
    else:
        lines = _summary_lines(so, checks)
        for i, A in enumerate(so.lattice.elements):
            lines.append(f"  {so.subword(i).placeholder_string()}  {{{','.join(map(str, members(A)))}}}")
        text = "\n".join(lines) + "\n"
    return text, all(checks.values())


def _cmd_check(cfg: RunConfig):
    sys_ = _system(cfg)
    word = _word(cfg, sys_)
    so = build_sorting_order(word, cfg.cap, cfg.element_cap)
    checks = _order_checks(so)
    report = is_antimatroid(so.family)
    jd = is_join_distributive(so.lattice)
    checks["antimatroid_conditions_agree"] = report.consistent
    checks["join_distributive_flags_agree"] = jd.consistent
    checks["natural_labelling_el"] = is_sn_el_labelling(so.lattice)
    cmp_ = compare_orders(so)
    checks["weak_subset_of_sorting"] = cmp_.weak_subset
    checks["sorting_subset_of_bruhat"] = cmp_.bruhat_superset
    checks["maximal_below_bruhat"] = verify_maximality(so, samples=cfg.samples, seed=cfg.seed)
    # strictness is reported only: it fails legitimately for commuting letters
    info = {
        "elements": len(so),
        "weak_covers": cmp_.weak_cover_count,
        "sorting_covers": cmp_.sorting_cover_count,
        "bruhat_covers": cmp_.bruhat_cover_count,
        "strict_below": cmp_.strict_below,
        "strict_above": cmp_.strict_above,
    }
    if cfg.format == "json":
        text = json.dumps({"word": list(word.letters), "checks": checks, "info": info}, indent=2) + "\n"
    elif cfg.format == "dot":
        text = sorting_order_to_dot(so)
    else:
        lines = [f"sorting word: {format_word(word.letters)}"]
        lines += [f"{k}: {v}" for k, v in info.items()]
        lines += [f"{'PASS' if v else 'FAIL'} {k}" for k, v in checks.items()]
        text = "\n".join(lines) + "\n"
    return text, all(checks.values())


def _cmd_sortables(cfg: RunConfig):
    sys_ = _system(cfg)
    try:
        cat = catalan_number(cfg.type_name) if cfg.type_name else None
    except ValueError:
        cat = None
    if cfg.census:
        census = sortable_census(sys_, cfg.type_name, cfg.element_cap)
        ok = all(bool(is_join_distributive(lat)) for lat in census.lattices)
        if cat is not None:
            ok = ok and all(k == cat for k in census.counts)
        if cfg.format == "json":
            text = census_to_json(census) + "\n"
        elif cfg.format == "dot":
            reps = {}
            for i, cid in enumerate(census.class_ids):
                reps.setdefault(cid, i)
            text = "".join(
                lattice_to_dot(census.lattices[i], names=_sortable_names(census.lattices[i])).replace(
                    "digraph", f"// class {cid}: {format_word(census.words[i])}\ndigraph", 1
                )
                for cid, i in sorted(reps.items())
            )
        else:
            lines = [f"type: {census.type_name}", f"classes: {len(census.classes)}"]
            for w, k, cid in zip(census.words, census.counts, census.class_ids):
                lines.append(f"  {format_word(w)}  sortables={k}  class={cid}")
            if cat is not None:
                lines.append(f"catalan: {cat}")
            lines.append(f"all_join_distributive: {_flag(ok)}")
            text = "\n".join(lines) + "\n"
        return text, ok

    c = parse_word(cfg.coxeter_word, sys_.n) if cfg.coxeter_word else sys_.generators
    c = check_coxeter_word(sys_, c)
    elems = enumerate_sortables(sys_, c, cfg.element_cap)
    lat = sortable_lattice(sys_, c, cfg.element_cap)
    report = sortable_report(sys_, c, cfg.element_cap)
    jd = report.join_distributive
    ok = jd and report.covers_in_full_order and len(lat) == len(elems) and (cat is None or len(elems) == cat)
    words = sorted((sys_.reduced_word(u) for u in elems), key=lambda w: (len(w), w))
    if cfg.format == "json":
        doc = {
            "type": sys_.name,
            "coxeter_word": list(c),
            "count": len(elems),
            "catalan": cat,
            "join_distributive": jd,
            "covers_in_full_order": report.covers_in_full_order,
            "info": {"equals_bruhat": report.equals_bruhat, "supersolvable": report.supersolvable},
            "elements": [list(w) for w in words],
        }
        text = json.dumps(doc, indent=2) + "\n"
    elif cfg.format == "dot":
        text = lattice_to_dot(lat, names=_sortable_names(lat))
    else:
        lines = [f"coxeter word: {format_word(c)}", f"sortables: {len(elems)}"]
        if cat is not None:
            lines.append(f"catalan: {cat}")
        lines.append(f"join_distributive: {_flag(jd)}")
        lines.append(f"covers_in_full_order: {_flag(report.covers_in_full_order)}")
        lines.append(f"info equals_bruhat: {report.equals_bruhat}")
        lines.append(f"info supersolvable: {report.supersolvable}")
        lines += [f"  {format_word(w)}" for w in words]
        text = "\n".join(lines) + "\n"
    return text, ok


def _sortable_names(lat) -> list[str]:
    letters = lat.sorting_word.letters
    return ["".join(str(letters[i - 1]) for i in members(A)) or "e" for A in lat.elements]


def _cmd_convexity(cfg: RunConfig):
    system = parse_set_system(Path(cfg.file).read_text())
    checks: dict[str, bool] = {"accessible": is_accessible(system)}
    info: dict[str, object] = {"ground": system.n, "sets": len(system)}
    lat = None
    if checks["accessible"]:
        report = is_antimatroid(system)
        checks["antimatroid"] = bool(report)
        checks["antimatroid_conditions_agree"] = report.consistent
        info["augmentation"] = report.augmentation
        info["union_closed"] = report.union_closed
        info["local"] = report.local
        info["supersolvable_natural_order"] = is_supersolvable_antimatroid(system)
        if report:
            lat = build_lattice_from_family(system)
            checks["join_distributive"] = bool(is_join_distributive(lat))
            # complements of an antimatroid with E feasible form a convex geometry
            if system.ground in system:
                closed = complement_system(system)
                checks["complement_antiexchange"] = satisfies_antiexchange(ClosureOperator(closed))
            info["sn_el_natural_order"] = is_sn_el_labelling(lat)
        if cfg.order_search:
            order = next(supersolvable_orders(system), None)
            checks["supersolvable_some_order"] = order is not None
            info["supersolvable_order"] = list(order) if order else None
    if cfg.format == "json":
        text = json.dumps({"checks": checks, "info": info}, indent=2) + "\n"
    elif cfg.format == "dot":
        if lat is None:
            raise UsageError("DOT output needs an antimatroid")
        text = lattice_to_dot(lat)
    else:
        lines = [f"{k}: {v}" for k, v in info.items()]
        lines += [f"{'PASS' if v else 'FAIL'} {k}" for k, v in checks.items()]
        text = "\n".join(lines) + "\n"
    return text, all(checks.values())


_DISPATCH = {
    "sort": _cmd_sort,
    "poset": _cmd_poset,
    "check": _cmd_check,
    "sortables": _cmd_sortables,
    "convexity": _cmd_convexity,
}


def dispatch(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        text, ok = _DISPATCH[cfg.command](cfg)
    except (ValueError, UsageError, OSError) as exc:
        print(f"coxsort {cfg.command}: error: {exc}", file=stderr)
        return 2
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        stdout.write(text)
    return 0 if ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"coxsort: error: {exc}", file=sys.stderr)
        return 2
    return dispatch(cfg)


if __name__ == "__main__":
    sys.exit(main())
