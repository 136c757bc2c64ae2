"""Character-sum bias of subsets of F_q and searches for low-bias sets.

The bias of a set B is the largest normalized character-sum magnitude
``max_{w != 0} |sum_{b in B} e^(2*pi*i*w*b/q)| / |B|``. Sets with small
bias are the raw material for collision-resistant phase encodings, so this
module provides an exact scan plus exhaustive and heuristic searches.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from . import kernels
from .errors import (
    BudgetExceeded,
    DomainTooLarge,
    MalformedFile,
    RangeError,
)
from .field import FieldElement, PrimeField, make_field

# Tolerance for delta-goodness comparisons; documented part of the contract.
GOODNESS_TOL = 1e-9

# Cached bias values must agree with a recomputation this tightly.
BIAS_RECOMPUTE_TOL = 1e-12

_MASK64 = (1 << 64) - 1


class BiasSet:
    """A subset of F_q together with its (lazily computed) bias."""

    __slots__ = ("field", "elements", "_bias")

    def __init__(
        self,
        field: PrimeField,
        elements: Sequence[Union[int, FieldElement]],
        bias: Optional[float] = None,
    ):
        values = sorted(int(field.coerce(e)) for e in elements)
        if not values:
            raise RangeError("bias set needs at least one element")
        if len(set(values)) != len(values):
            raise RangeError(f"bias set elements must be distinct, got {values}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "elements", tuple(values))
        object.__setattr__(self, "_bias", bias)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("BiasSet is immutable")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BiasSet)
            and other.q == self.q
            and other.elements == self.elements
        )

    def __hash__(self) -> int:
        return hash((self.q, self.elements))

    def __repr__(self) -> str:
        return f"BiasSet(q={self.q}, elements={list(self.elements)})"

    def _coerce_value(self, w: Union[int, FieldElement]) -> int:
        return int(self.field.coerce(w))

    def dft_value(self, w: Union[int, FieldElement]) -> complex:
        """Character sum sum_b e^(2*pi*i*w*b/q), phases at reduced residues."""
        wv = self._coerce_value(w)
        roots = kernels.unit_roots(self.q)
        return complex(sum(roots[(wv * b) % self.q] for b in self.elements))

    def dft_table(self) -> np.ndarray:
        """All q character sums at once (kernel-backed)."""
        return kernels.dft_all(kernels.unit_roots(self.q), kernels.as_elements_array(self.elements))

    def bias(self) -> float:
        """max over w != 0 of |dft_value(w)| / |B|; cached after first call."""
        if self._bias is None:
            numer = kernels.max_abs_dft(
                kernels.unit_roots(self.q), kernels.as_elements_array(self.elements)
            )
            object.__setattr__(self, "_bias", numer / self.size)
        return self._bias

    def is_delta_good(self, delta: float) -> bool:
        """True iff bias <= delta + 1e-9."""
        if not 0.0 <= delta <= 1.0:
            raise RangeError(f"delta must lie in [0, 1], got {delta}")
        return self.bias() <= delta + GOODNESS_TOL

    def to_json(self) -> dict:
        return {"q": self.q, "elements": list(self.elements), "bias": self.bias()}

    @classmethod
    def from_json(cls, doc: dict) -> "BiasSet":
        """Parse and validate the bias-set interchange document."""
        try:
            q = doc["q"]
            elements = doc["elements"]
        except (TypeError, KeyError) as exc:
            raise MalformedFile(f"bias-set document missing field: {exc}") from exc
        if not isinstance(q, int) or not isinstance(elements, list):
            raise MalformedFile("bias-set document has wrong field types")
        field = make_field(q)
        bset = cls(field, elements)
        stored = doc.get("bias")
        if stored is not None:
            recomputed = bset.bias()
            if abs(float(stored) - recomputed) > BIAS_RECOMPUTE_TOL:
                raise MalformedFile(
                    f"stored bias {stored!r} disagrees with recomputed {recomputed!r}"
                )
        return bset


def dft_value(bset: BiasSet, w: Union[int, FieldElement]) -> complex:
    return bset.dft_value(w)


def bias(bset: BiasSet) -> float:
    return bset.bias()


def is_delta_good(bset: BiasSet, delta: float) -> bool:
    return bset.is_delta_good(delta)


def save_bias_set(bset: BiasSet, path: str) -> None:
    from .jsonio import dump_json

    dump_json(bset.to_json(), path)


def load_bias_set(path: str, max_q: Optional[int] = None) -> BiasSet:
    """Read and validate a bias-set file.

    ``max_q`` rejects oversized moduli *before* the load-time bias
    recomputation, so callers can cap the scan cost explicitly.
    """
    if not os.path.exists(path):
        raise MalformedFile(f"no such bias-set file: {path}")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"bias-set file {path} is not valid JSON: {exc}") from exc
    if max_q is not None and isinstance(doc, dict) and isinstance(doc.get("q"), int):
        if doc["q"] > max_q:
            raise DomainTooLarge(
                f"bias scans capped at q <= {max_q}, file declares q = {doc['q']}"
            )
    return BiasSet.from_json(doc)


@dataclass(frozen=True)
class SearchConfig:
    """Parameters for a low-bias set search over F_q."""

    q: int
    size: int
    mode: str = "exhaustive"
    budget: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("exhaustive", "heuristic"):
            raise RangeError(f"mode must be 'exhaustive' or 'heuristic', got {self.mode!r}")
        if self.size < 1:
            raise RangeError(f"size must be >= 1, got {self.size}")
        if self.budget < 1:
            raise RangeError(f"budget must be >= 1, got {self.budget}")


def exhaustive_search(cfg: SearchConfig) -> BiasSet:
    """The size-T subset of F_q with minimum bias, smallest element list on ties.

    Candidates are enumerated in lexicographic order, so keeping only strict
    improvements makes the tie-break automatic.
    """
    if cfg.mode != "exhaustive":
        raise RangeError(f"exhaustive_search needs mode='exhaustive', got {cfg.mode!r}")
    field = make_field(cfg.q)
    if cfg.size > cfg.q:
        raise RangeError(f"size {cfg.size} exceeds field size {cfg.q}")
    n_candidates = math.comb(cfg.q, cfg.size)
    if n_candidates > cfg.budget:
        raise BudgetExceeded(
            f"C({cfg.q},{cfg.size}) = {n_candidates} subsets exceed budget {cfg.budget}"
        )
    roots = kernels.unit_roots(cfg.q)
    best_lam = math.inf
    best: Optional[Tuple[int, ...]] = None
    for combo in itertools.combinations(range(cfg.q), cfg.size):
        lam = kernels.max_abs_dft(roots, kernels.as_elements_array(combo)) / cfg.size
        if lam < best_lam:
            best_lam = lam
            best = combo
    assert best is not None
    return BiasSet(field, best, bias=best_lam)


def _descend(q: int, size: int, seed: int, restart: int) -> Tuple[int, Tuple[int, ...], float]:
    """One seeded restart of steepest-descent swap search.

    Runs to a local minimum and returns (evaluations consumed, elements,
    bias). Deterministic in (q, size, seed, restart).
    """
    rng = np.random.Generator(np.random.Philox(key=[seed & _MASK64, restart]))
    roots = kernels.unit_roots(q)
    current = np.sort(rng.permutation(q)[:size]).astype(np.int64)
    current_lam = kernels.max_abs_dft(roots, kernels.as_elements_array(current)) / size
    evals = 1
    if size >= q:
        return evals, tuple(int(v) for v in current), current_lam

    member = np.zeros(q, dtype=bool)
    member[current] = True
    while True:
        f = kernels.dft_all(roots, kernels.as_elements_array(current))
        candidates = np.flatnonzero(~member).astype(np.int64)
        best_lam = current_lam
        best_move: Optional[Tuple[int, int]] = None
        best_set: Optional[Tuple[int, ...]] = None
        current_set = set(int(v) for v in current)
        for b_out in current:
            maxima = kernels.swap_scan_max(roots, f, int(b_out), candidates)
            evals += len(candidates)
            base = current_set - {int(b_out)}
            for c, numer in zip(candidates, maxima):
                lam = numer / size
                if lam > best_lam:
                    continue
                new_set = tuple(sorted(base | {int(c)}))
                if lam < best_lam or (best_set is not None and new_set < best_set):
                    best_lam = lam
                    best_move = (int(b_out), int(c))
                    best_set = new_set
        if best_move is None or best_set is None:
            break
        # Recompute from scratch so the accepted bias satisfies the cached-
        # bias invariant; bail out if the ulp-level scan win evaporates.
        new_elems = np.array(best_set, dtype=np.int64)
        new_lam = kernels.max_abs_dft(roots, kernels.as_elements_array(new_elems)) / size
        if not new_lam < current_lam:
            break
        member[best_move[0]] = False
        member[best_move[1]] = True
        current = new_elems
        current_lam = new_lam
    return evals, tuple(int(v) for v in current), current_lam


def heuristic_search(cfg: SearchConfig, workers: int = 1) -> BiasSet:
    """Seeded random-restart steepest-descent swap search.

    Each restart draws a uniform size-T subset, repeatedly applies the
    single-element swap that most decreases the bias, and stops at a local
    minimum. Restarts are admitted in order while the cumulative number of
    bias evaluations stays below ``cfg.budget`` (the crossing restart still
    completes), and the best set over admitted restarts wins, ties broken
    by lexicographically smallest element list. Restart r is keyed by
    (seed, r), so the result is identical for any worker count.
    """
    if cfg.mode != "heuristic":
        raise RangeError(f"heuristic_search needs mode='heuristic', got {cfg.mode!r}")
    if workers < 1:
        raise RangeError(f"workers must be >= 1, got {workers}")
    field = make_field(cfg.q)
    if cfg.size > cfg.q:
        raise RangeError(f"size {cfg.size} exceeds field size {cfg.q}")

    seed = cfg.seed & _MASK64
    consumed = 0
    best: Optional[Tuple[float, Tuple[int, ...]]] = None
    restart = 0
    while consumed < cfg.budget:
        wave = list(range(restart, restart + workers))
        if workers == 1:
            results = [_descend(cfg.q, cfg.size, seed, wave[0])]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(
                    pool.map(lambda r: _descend(cfg.q, cfg.size, seed, r), wave)
                )
        for evals, elems, lam in results:
            if consumed >= cfg.budget:
                break  # not admitted; a 1-worker run would have stopped here
            consumed += evals
            key = (lam, elems)
            if best is None or key < best:
                best = key
        restart += workers
    assert best is not None
    return BiasSet(field, best[1], bias=best[0])


def search(cfg: SearchConfig, workers: int = 1) -> BiasSet:
    """Dispatch on cfg.mode."""
    if cfg.mode == "exhaustive":
        return exhaustive_search(cfg)
    return heuristic_search(cfg, workers=workers)
