"""Verification checks: published tables, exhaustive properties, Hamilton cycles.

Each check is a pure function of (max_k, seed) returning an outcome with a
witness; numbered checks are the acceptance criteria.  Checks never relax
an expectation: a table that disagrees with the computation fails, and the
witness says where.
"""

from __future__ import annotations

import ast
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from math import comb
from typing import Callable

from . import golden
from .castling import (
    CloneError,
    classify_flip,
    clone_decode,
    clone_of,
    clone_update,
    flip_pairs,
    flipped_h,
    generate_table,
    h_of,
    render_clone,
    tight_nest,
)
from .control import RecreateError, j_prefix, recreate_h, triangle_line
from .dyck import blow_to, dyck_words, nest_to_word, render_nest, word_to_nest
from .export import dumps, hamilton_document, render_h, two_factor_document
from .hamilton import LiftError, assemble_hamilton_odd, lift_hamilton_middle, spanning_tree
from .oddgraph import anchor_class, appearance_profile, arc_neighbor, flip_at, support, view
from .rgs import (
    Trgs,
    catalan,
    catalan_closed,
    gamma_rank,
    order_of_rank,
    parent_rank,
    thread_partition,
    trgs_rank,
    trgs_unrank,
)
from .twofactor import lift_two_factor, permutation_of, uniform_two_factor, vertical_list
from .validate import check_hamilton, check_two_factor

DEFAULT_SEED = 20240611


@dataclass
class Outcome:
    ok: bool
    witness: str = ""


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: str
    elapsed: float


@dataclass
class Report:
    suite: str
    max_k: int | None
    seed: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_k": self.max_k,
            "seed": self.seed,
            "ok": self.ok,
            "checks": [asdict(r) for r in self.results],
        }


def _bound(stated: int, max_k: int | None) -> int:
    return stated if max_k is None else min(stated, max_k)


def _diffs(label: str, printed: list[str], computed: list[str], offset: int = 0) -> list[str]:
    out = []
    if len(printed) != len(computed):
        out.append(f"{label}: {len(printed)} printed vs {len(computed)} computed")
    bad = [i for i, (a, b) in enumerate(zip(printed, computed)) if a != b]
    if bad:
        i = bad[0]
        out.append(
            f"{label}: {len(bad)} of {len(printed)} differ, first at index {i + offset}: "
            f"printed {printed[i]}, computed {computed[i]}"
        )
    return out


def _finish(problems: list[str], note: str = "") -> Outcome:
    if problems:
        return Outcome(False, "; ".join(problems))
    return Outcome(True, note)


# -- 1: sequences ----------------------------------------------------------------

def c01_sequences(max_k: int | None, seed: int) -> Outcome:
    start = time.perf_counter()
    problems = []
    d1 = golden.lines("trgs_strings.txt")
    problems += _diffs("restricted-growth strings", d1, [str(trgs_unrank(n)) for n in range(len(d1))])
    d2 = golden.lines("gamma_sequence.txt")
    problems += _diffs("gamma sequence", d2, [str(gamma_rank(n)) for n in range(1, len(d2) + 1)], 1)
    d3 = golden.lines("parent_sequence.txt")
    problems += _diffs("parent sequence", d3, [str(parent_rank(n)) for n in range(1, len(d3) + 1)], 1)
    d4 = golden.lines("tight_nests.txt")
    problems += _diffs("tight nests", d4, [render_nest(tight_nest(n)) for n in range(len(d4))])
    d5 = golden.lines("dyck_words.txt")
    problems += _diffs("dyck words", d5, [nest_to_word(tight_nest(n)) for n in range(len(d5))])
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        problems.append(f"took {elapsed:.2f} s")
    counts = f"{len(d1)}, {len(d2)}, {len(d3)}, {len(d4)}, {len(d5)} terms"
    return _finish(problems, counts)


# -- 2: Catalan counts ------------------------------------------------------------

def c02_catalan(max_k: int | None, seed: int) -> Outcome:
    start = time.perf_counter()
    top = _bound(10, max_k)
    problems = []
    for k in range(1, top + 1):
        rows = len(generate_table(k))
        if not rows == catalan(k) == catalan_closed(k):
            problems.append(f"k={k}: {rows} rows, C_k={catalan(k)}, closed form {catalan_closed(k)}")
    elapsed = time.perf_counter() - start
    if elapsed >= 10.0:
        problems.append(f"took {elapsed:.2f} s")
    return _finish(problems, f"k <= {top}, C_{top} = {catalan(top)}")


# -- 3: clone table ---------------------------------------------------------------

def _anchored(n: int, k: int) -> str:
    return "0" + render_nest(blow_to(tight_nest(n), k))


def _clone(n: int, k: int) -> str:
    return render_clone(clone_of(blow_to(tight_nest(n), k)))


def c03_clone_table(max_k: int | None, seed: int) -> Outcome:
    problems = []
    for cells in golden.rows("clone_table.txt"):
        k, n = int(cells[0]), int(cells[2])
        if n == 0:
            # the root: its word, and its clone once it is blown to k = 2
            got = ["0", _anchored(0, 1), _clone(0, 2)]
            want = [cells[4], cells[7], cells[9]]
        else:
            rho = parent_rank(n)
            hv = h_of(n)
            got = [
                str(rho), "".join(map(str, trgs_unrank(rho).padded(k - 1))),
                "".join(map(str, trgs_unrank(n).padded(k - 1))), str(gamma_rank(n)),
                _anchored(rho, k), _anchored(n, k), _clone(rho, k), _clone(n, k),
                render_h(hv.h, hv.depends_on_k),
            ]
            want = [cells[1], cells[3], cells[4], cells[5], cells[6], cells[7], cells[8], cells[9], cells[10]]
        if got != want:
            problems.append(f"n={n}: printed {' '.join(want)}, computed {' '.join(got)}")
    return _finish(problems, "14 rows")


# -- 4: clone laws ----------------------------------------------------------------

def c04_clone_laws(max_k: int | None, seed: int) -> Outcome:
    top = _bound(8, max_k)
    problems = []
    for k in range(2, top + 1):
        table = generate_table(k)
        clones = [clone_of(r.blown) for r in table.rows]
        for row in table.rows[1:]:
            n = row.n
            rho, gamma = parent_rank(n), gamma_rank(n)
            a, b = clones[rho], clones[n]
            changed = [i for i in range(k - 1) if a[i] != b[i]]
            if changed != [k - 1 - gamma]:
                problems.append(f"k={k}, n={n}: clone changes at {changed}")
            elif clone_update(a, n, k) != b:
                problems.append(f"k={k}, n={n}: stepwise update gives {clone_update(a, n, k)}")
        if len(set(clones)) != len(clones):
            problems.append(f"k={k}: clones are not distinct")
        for row, sigma in zip(table.rows, clones):
            try:
                back = clone_decode(sigma, k)
            except CloneError as exc:
                problems.append(f"k={k}, n={row.n}: {exc}")
                continue
            if back != row.blown:
                problems.append(f"k={k}, n={row.n}: decoding gives {render_nest(back)}")
        if len(problems) > 5:
            break
    return _finish(problems[:5], f"k <= {top}, {catalan(top)} nests at the top")


# -- 5: permutations --------------------------------------------------------------

def c05_permutations(max_k: int | None, seed: int) -> Outcome:
    problems = []
    differ = 0
    for k, b, p, pi in golden.rows("column_permutations.txt"):
        perm = permutation_of(b, int(k))
        got_p, got_pi = "".join(map(str, perm.p)), "".join(map(str, perm.pi))
        if (got_p, got_pi) != (p, pi):
            problems.append(f"k={k}, b={b}: printed p={p} pi={pi}, computed p={got_p} pi={got_pi}")
        differ += p != pi
    return _finish(problems, f"9 cases, {differ} with pi != p")


# -- 6: O_3 adjacencies -----------------------------------------------------------

def c06_adjacencies(max_k: int | None, seed: int) -> Outcome:
    problems = []
    for top, pos, bottom in golden.rows("arc_neighbors.txt"):
        p = int(pos)
        chi, other = tuple(map(int, top)), tuple(map(int, bottom))
        u, w = appearance_profile(chi), appearance_profile(other)
        if support(u) & support(w):
            problems.append(f"{top}/{bottom}: supports meet")
        if flip_at(u, p) != w:
            problems.append(f"{top} at {p}: computed {flip_at(u, p)}, printed {w}")
        if appearance_profile(arc_neighbor(chi, chi[p])) != w:
            problems.append(f"{top}: arc of color {chi[p]} misses {bottom}")
        if chi[p] + other[p] != 3:
            problems.append(f"{top}/{bottom}: colors {chi[p]} + {other[p]} != 3")
    return _finish(problems, "20 pairs")


# -- 7: rotation classes ----------------------------------------------------------

def c07_classes(max_k: int | None, seed: int) -> Outcome:
    problems = []
    rows = golden.lines("rotation_classes.txt")[:5]
    for n, line in enumerate(rows):
        printed = set(line.split(":")[1].split())
        got = set(anchor_class(n, 3).words())
        if printed != got:
            problems.append(f"class {n}: printed {sorted(printed - got)}, computed {sorted(got - printed)}")
    return _finish(problems, "5 classes")


# -- 8: uniform 2-factor ----------------------------------------------------------

def _vertical_lists() -> dict[tuple[int, int], list[tuple[str, str]]]:
    out: dict[tuple[int, int], list[tuple[str, str]]] = {}
    for k, n, nest, sub in golden.rows("vertical_lists.txt"):
        out.setdefault((int(k), int(n)), []).append((nest, sub))
    return out


def c08_two_factor(max_k: int | None, seed: int) -> Outcome:
    problems = []
    top = _bound(7, max_k)
    for k in range(1, top + 1):
        factor = uniform_two_factor(k)
        verts = [v for c in factor.cycles for v in c]
        if len(factor.cycles) != catalan(k) or any(len(c) != 2 * k + 1 for c in factor.cycles):
            problems.append(f"k={k}: cycle count or length is off")
        if len(set(verts)) != len(verts) or len(verts) != comb(2 * k + 1, k):
            problems.append(f"k={k}: cycles do not partition the vertices")
    rows = _vertical_lists()
    for k, n in ((1, 0), (3, 0)):
        printed = [int(sub[0]) for _, sub in rows[(k, n)]]
        got = list(vertical_list(n, k).positions)
        if got != printed:
            problems.append(f"positions k={k}, n={n}: printed {printed}, computed {got}")
    lift_top = _bound(5, max_k)
    for k in range(1, lift_top + 1):
        lifted = lift_two_factor(k)
        verts = {v for c in lifted.cycles for v in c}
        if len(lifted.cycles) != catalan(k) or any(len(c) != 2 * (2 * k + 1) for c in lifted.cycles):
            problems.append(f"lift k={k}: cycle count or length is off")
        if len(verts) != 2 * comb(2 * k + 1, k):
            problems.append(f"lift k={k}: cycles do not cover M_k")
    return _finish(problems, f"k <= {top}, lifts for k <= {lift_top}")


# -- 9: h values ------------------------------------------------------------------

def c09_h_values(max_k: int | None, seed: int) -> Outcome:
    problems = []
    printed = [row[4] for row in golden.rows("tree_rows.txt")]
    computed = ["-"] + [str(h_of(n).h) for n in range(1, len(printed))]
    problems += _diffs("printed h column", printed, computed)
    top = _bound(7, max_k)
    for k in range(2, top + 1):
        try:
            recreate_h(k)
        except RecreateError as exc:
            problems.append(f"recreate k={k}: {exc}")
    # the literal dichotomy: exactly one of h(r) = k - h(n), h(r) = h(n)
    exceptions, pairs = [], 0
    for n, r, _ in flip_pairs(top):
        if n == 0:
            continue
        pairs += 1
        hn, hr, k = h_of(n).h, h_of(r).h, order_of_rank(r)
        if (hr == k - hn) == (hr == hn):
            exceptions.append((n, r))
    if exceptions:
        n, r = exceptions[0]
        problems.append(
            f"dichotomy h(r) = k - h(n) or h(r) = h(n): {len(exceptions)} of {pairs} pairs "
            f"fit neither, first (n, r) = ({n}, {r}) with h = {h_of(n).h}, {h_of(r).h}"
        )
    return _finish(problems, f"41 values, recreate for k <= {top}, {pairs} related pairs")


# -- 10: control strings ----------------------------------------------------------

def c10_control(max_k: int | None, seed: int) -> Outcome:
    problems = []
    top = _bound(8, max_k)
    for k in range(1, top + 1):
        jp = j_prefix(k)
        if jp.block_sizes() != triangle_line(k - 1):
            problems.append(f"k={k}: blocks {jp.block_sizes()} vs line {triangle_line(k - 1)}")
        gammas = (None,) + tuple(gamma_rank(n) for n in range(1, catalan(k)))
        if jp.alphas() != gammas:
            problems.append(f"k={k}: value projection differs from gamma")
    for k, line in enumerate(golden.lines("catalan_triangle.txt")):
        got = " ".join(map(str, triangle_line(k)))
        if got != line:
            problems.append(f"line {k}: printed {line}, computed {got}")
    return _finish(problems, f"k <= {top}, 8 triangle lines")


# -- 11-13: Hamilton cycles ---------------------------------------------------------

def _roundtrip(doc: dict) -> dict:
    return json.loads(dumps(doc))


def _trees() -> dict[int, set[frozenset[int]]]:
    return {
        int(row[0]): {frozenset(int(c, 16) for c in e) for e in row[1:]}
        for row in golden.rows("hyperedges.txt")
    }


def c11_hamilton_odd(max_k: int | None, seed: int) -> Outcome:
    start = time.perf_counter()
    problems = []
    top = _bound(7, max_k)
    lengths = []
    for k in range(3, top + 1):
        cert = assemble_hamilton_odd(k)
        verdict = check_hamilton(_roundtrip(hamilton_document(cert)))
        if not verdict.ok:
            problems.append(f"k={k}: {verdict.problems[0]}")
        lengths.append(len(cert.cycle))
        if len(cert.cycle) != comb(2 * k + 1, k):
            problems.append(f"k={k}: length {len(cert.cycle)}")
    for k, want in _trees().items():
        got = {frozenset(e) for e in spanning_tree(k).rank_sets()}
        if got != want:
            problems.append(f"tree k={k}: computed {sorted(map(sorted, got))}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60.0:
        problems.append(f"took {elapsed:.1f} s")
    return _finish(problems, f"lengths {lengths} in {elapsed:.1f} s")


def c12_hamilton_middle(max_k: int | None, seed: int) -> Outcome:
    problems, notes = [], []
    top = _bound(6, max_k)
    for k in range(3, top + 1):
        required = k <= 4
        try:
            cert = lift_hamilton_middle(k)
        except LiftError as exc:
            d = exc.diagnostic
            note = f"k={k}: split diagnostic at {d.label} ({d.reason}, cycles {d.cycle_lengths})"
            (problems if required else notes).append(note)
            continue
        verdict = check_hamilton(_roundtrip(hamilton_document(cert)))
        if not verdict.ok:
            problems.append(f"k={k}: {verdict.problems[0]}")
        else:
            notes.append(f"k={k}: {len(cert.cycle)}")
    return _finish(problems, ", ".join(notes))


def _validator_imports() -> list[str]:
    source = resources.files("dycknest").joinpath("validate.py").read_text()
    found = []
    for node in ast.walk(ast.parse(source)):
        if isinstance(node, ast.ImportFrom):
            found.append(("." * node.level) + (node.module or ""))
        elif isinstance(node, ast.Import):
            found += [a.name for a in node.names]
    return found


def c13_independent_validator(max_k: int | None, seed: int) -> Outcome:
    problems = []
    own = [m for m in _validator_imports() if m.startswith(".") or m.startswith("dycknest")]
    if own:
        problems.append(f"validator imports {own}")
    top = _bound(5, max_k)
    for k in range(1, top + 1):
        for kind, factor in (("odd", uniform_two_factor(k)), ("middle", lift_two_factor(k))):
            doc = _roundtrip(two_factor_document(factor, kind))
            verdict = check_two_factor(doc)
            if not verdict.ok:
                problems.append(f"two-factor {kind} k={k}: {verdict.problems[0]}")
    # negative controls: corrupted certificates must be rejected
    doc = _roundtrip(hamilton_document(assemble_hamilton_odd(3)))
    swapped = dict(doc, cycle=[doc["cycle"][1], doc["cycle"][0]] + doc["cycle"][2:])
    short = dict(doc, cycle=doc["cycle"][:-1])
    if check_hamilton(swapped).ok or check_hamilton(short).ok:
        problems.append("validator accepts a corrupted Hamilton cycle")
    tf = _roundtrip(two_factor_document(uniform_two_factor(3)))
    merged = dict(tf, cycles=tf["cycles"][1:])
    if check_two_factor(merged).ok:
        problems.append("validator accepts a partial 2-factor")
    return _finish(problems, f"2-factors for k <= {top} and corrupted controls")


# -- further table and property checks -----------------------------------------------

def t_vertical_list_rows(max_k: int | None, seed: int) -> Outcome:
    """Every row of the k <= 3 lists: nest, flipped position, and for k = 3 the class and rotation."""
    problems = []
    for (k, n), printed in sorted(_vertical_lists().items()):
        vl = vertical_list(n, k)
        for i, ((nest, sub), row) in enumerate(zip(printed, vl.rows)):
            v = view(row)
            got = render_nest(v.nest) + " " + str(vl.positions[i])
            if k == 3:
                got += f"{v.rank}{v.right_shift}"
            if got != f"{nest} {sub}":
                problems.append(f"k={k}, n={n}, row {i}: printed {nest} {sub}, computed {got}")
    return _finish(problems, "k = 1, 2, 3")


def t_thread_partition(max_k: int | None, seed: int) -> Outcome:
    problems = []
    part = thread_partition(6)
    for (i, n0, length, gamma), t in zip(golden.rows("threads.txt"), part.threads):
        got = f"{t.head} {t.length} {'*' if t.gamma is None else t.gamma}"
        if got != f"{n0} {length} {gamma}":
            problems.append(f"thread {i}: printed {n0} {length} {gamma}, computed {got}")
    if len(part.threads) != 42:
        problems.append(f"{len(part.threads)} threads")
    return _finish(problems, "42 threads")


def t_tree_rows(max_k: int | None, seed: int) -> Outcome:
    problems = []
    for n, b, rho, gamma, _ in golden.rows("tree_rows.txt"):
        n = int(n)
        got = [str(trgs_unrank(n))]
        got += ["-", "-"] if n == 0 else [str(parent_rank(n)), str(gamma_rank(n))]
        if got != [b, rho, gamma]:
            problems.append(f"n={n}: printed {b} {rho} {gamma}, computed {' '.join(got)}")
    return _finish(problems, "b, rho and gamma for 42 rows")


def p_flip_law(max_k: int | None, seed: int) -> Outcome:
    """h(r) follows from h(n) and the enclosure test for every related pair."""
    problems = []
    top = _bound(7, max_k)
    kinds = {"preserved": 0, "supplementary": 0}
    for n, r, _ in flip_pairs(top):
        if n == 0:
            continue
        kind = classify_flip(n, r)
        kinds[kind] += 1
        if flipped_h(h_of(n), r, kind) != h_of(r):
            problems.append(f"(n, r) = ({n}, {r}): {kind} predicts {flipped_h(h_of(n), r, kind).h}, h = {h_of(r).h}")
    return _finish(problems[:5], f"k <= {top}: {kinds['preserved']} preserved, {kinds['supplementary']} supplementary")


def p_nests_are_dyck(max_k: int | None, seed: int) -> Outcome:
    """Sorted table nests equal the nests of all Dyck words, and blowing commutes with the table."""
    problems = []
    top = _bound(7, max_k)
    for k in range(1, top + 1):
        table = generate_table(k)
        if sorted(r.blown for r in table.rows) != sorted(word_to_nest(w) for w in dyck_words(k)):
            problems.append(f"k={k}: table nests differ from the Dyck nests")
        if k < top:
            bigger = generate_table(k + 1)
            if any(blow_to(r.blown, k + 1) != bigger[r.n].blown for r in table.rows):
                problems.append(f"k={k}: blowing does not commute with the table")
    return _finish(problems, f"k <= {top}")


def p_random_roundtrips(max_k: int | None, seed: int) -> Outcome:
    """Seeded round trips on large inputs: word <-> nest and rank <-> string."""
    rng = random.Random(seed)
    problems = []
    for _ in range(200):
        k = rng.randint(9, 60)
        word = _random_dyck(rng, k)
        if nest_to_word(word_to_nest(word)) != word:
            problems.append(f"word {word} does not round-trip")
        n = rng.randrange(catalan(25))
        if trgs_rank(trgs_unrank(n)) != n:
            problems.append(f"rank {n} does not round-trip")
    return _finish(problems[:3], f"seed {seed}")


def _random_dyck(rng: random.Random, k: int) -> str:
    """A uniform Dyck word: rotate a random string with one extra 0 to start after its last minimum."""
    bits = ["0"] * (k + 1) + ["1"] * k
    rng.shuffle(bits)
    height, low, cut = 0, 0, 0
    for i, c in enumerate(bits):
        height += 1 if c == "0" else -1
        if height <= low:
            low, cut = height, i + 1
    s = "".join(bits[cut:] + bits[:cut])
    return s[1:]


def h_components(max_k: int | None, seed: int) -> Outcome:
    """Each flip merges |e| cycles into one."""
    problems = []
    top = _bound(6, max_k)
    for k in range(3, top + 1):
        cert = assemble_hamilton_odd(k, track_components=True)
        count = catalan(k)
        for e, after in zip(cert.hyperedges, cert.components_after):
            if after != count - (len(e.ranks) - 1):
                problems.append(f"k={k}, {e.label}: {count} -> {after} components")
            count = after
        if sum(len(e.ranks) - 1 for e in cert.hyperedges) != catalan(k) - 1:
            problems.append(f"k={k}: hyperedge arities do not sum to C_k - 1")
    return _finish(problems, f"k <= {top}")


# -- registry -----------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    fn: Callable[[int | None, int], Outcome]


CRITERIA: dict[int, Check] = {
    1: Check("1 sequence reproduction", "tables", c01_sequences),
    2: Check("2 catalan counts", "properties", c02_catalan),
    3: Check("3 clone table", "tables", c03_clone_table),
    4: Check("4 clone laws", "properties", c04_clone_laws),
    5: Check("5 column permutations", "tables", c05_permutations),
    6: Check("6 odd graph adjacencies", "tables", c06_adjacencies),
    7: Check("7 rotation classes", "tables", c07_classes),
    8: Check("8 uniform two-factor", "properties", c08_two_factor),
    9: Check("9 h sequence", "properties", c09_h_values),
    10: Check("10 control strings", "properties", c10_control),
    11: Check("11 hamilton odd graphs", "hamilton", c11_hamilton_odd),
    12: Check("12 hamilton middle levels", "hamilton", c12_hamilton_middle),
    13: Check("13 independent validator", "hamilton", c13_independent_validator),
}

EXTRA: list[Check] = [
    Check("vertical list rows", "tables", t_vertical_list_rows),
    Check("thread partition", "tables", t_thread_partition),
    Check("tree rows", "tables", t_tree_rows),
    Check("flip law", "properties", p_flip_law),
    Check("table nests are dyck nests", "properties", p_nests_are_dyck),
    Check("random round trips", "properties", p_random_roundtrips),
    Check("flip component counts", "hamilton", h_components),
]

SUITES = ("tables", "properties", "hamilton", "all")


def checks_for(suite: str) -> list[Check]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    every = list(CRITERIA.values()) + EXTRA
    return every if suite == "all" else [c for c in every if c.suite == suite]


def run_check(check: Check, max_k: int | None, seed: int) -> CheckResult:
    start = time.perf_counter()
    try:
        outcome = check.fn(max_k, seed)
    except Exception as exc:  # a crash is a failed check with its message as witness
        outcome = Outcome(False, f"{type(exc).__name__}: {exc}")
    return CheckResult(check.name, outcome.ok, outcome.witness, time.perf_counter() - start)


def _run_named(args: tuple[str, int | None, int]) -> CheckResult:
    name, max_k, seed = args
    check = next(c for c in list(CRITERIA.values()) + EXTRA if c.name == name)
    return run_check(check, max_k, seed)


def run_suite(suite: str, max_k: int | None = None, seed: int = DEFAULT_SEED, jobs: int = 1) -> Report:
    """Run a suite; results keep the registry order whatever the parallelism."""
    selected = checks_for(suite)
    report = Report(suite, max_k, seed)
    if jobs <= 1:
        report.results = [run_check(c, max_k, seed) for c in selected]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.results = list(pool.map(_run_named, [(c.name, max_k, seed) for c in selected]))
    return report


def format_result(r: CheckResult) -> str:
    status = "PASS" if r.ok else "FAIL"
    tail = f" - {r.witness}" if r.witness else ""
    return f"{status} {r.name} ({r.elapsed:.2f} s){tail}"
