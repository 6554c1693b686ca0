"""Sound-to-sound distances.

Both comparisons return a value in [0, 1]: 0 for identical feature bundles,
1 for maximally different sounds. Vowels are scored as a weighted Manhattan
distance over (open, back) and rounding. Consonants combine a rule-based
manner distance with the place gap; when that combined distance stays at or
below the threshold alpha, voicing and the remaining binary/ternary features
are mixed in with their own weights, otherwise it is returned alone (clamped
to 1). Vowels are never compared with consonants: a cross-type substitution
costs ``cross_type_cost``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError, MannerTableError
from .features import CONSONANT, MANNERS, ConsonantFeatures, Phone, VowelFeatures


@dataclass(frozen=True)
class DistanceConfig:
    """Weights and switches for the phone-distance formulas.

    The consonant weights must satisfy
    ``consonant_pm_weight + voiced_weight + beta == 1``.
    ``literal_vowel_branch`` switches the vowel formula to the two-branch
    variant that charges (d_ob + 1)/3 whenever the open/back gap is at most
    0.5; the default uniform formula scores every pair as the weighted
    Manhattan distance. Both agree on pairs with an open/back gap above 0.5.
    """

    vowel_nonbinary_weight: float = 2.0 / 3.0
    vowel_binary_weight: float = 1.0 / 3.0
    consonant_pm_weight: float = 2.0 / 3.0
    voiced_weight: float = 1.0 / 5.0
    beta: float = 1.0 - 2.0 / 3.0 - 1.0 / 5.0
    alpha: float = 0.5
    literal_vowel_branch: bool = False
    cross_type_cost: float = 1.0

    def __post_init__(self):
        weights = {
            "vowel_nonbinary_weight": self.vowel_nonbinary_weight,
            "vowel_binary_weight": self.vowel_binary_weight,
            "consonant_pm_weight": self.consonant_pm_weight,
            "voiced_weight": self.voiced_weight,
            "beta": self.beta,
            "cross_type_cost": self.cross_type_cost,
        }
        for name, value in weights.items():
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name}={value} outside [0, 1]")
        if abs(self.consonant_pm_weight + self.voiced_weight + self.beta - 1.0) > 1e-12:
            raise ConfigError(
                "consonant weights must sum to 1: "
                f"{self.consonant_pm_weight} + {self.voiced_weight} + {self.beta}"
            )
        if abs(self.vowel_nonbinary_weight + self.vowel_binary_weight - 1.0) > 1e-12:
            raise ConfigError(
                "vowel weights must sum to 1: "
                f"{self.vowel_nonbinary_weight} + {self.vowel_binary_weight}"
            )
        if not 0.0 < self.alpha <= 1.0:
            raise ConfigError(f"alpha={self.alpha} outside (0, 1]")


@dataclass(frozen=True)
class MannerDistanceTable:
    """Symmetric manner-pair distances with a zero diagonal."""

    entries: dict[tuple[str, str], float]
    source: str = field(default="", compare=False)

    def __post_init__(self):
        for m1 in MANNERS:
            for m2 in MANNERS:
                value = self.entries.get((m1, m2))
                if value is None:
                    raise MannerTableError(f"missing manner pair ({m1}, {m2})")
                if not 0.0 <= value <= 1.0:
                    raise MannerTableError(
                        f"distance {value} for ({m1}, {m2}) outside [0, 1]"
                    )
                if value != self.entries.get((m2, m1)):
                    raise MannerTableError(f"asymmetric pair ({m1}, {m2})")
            if self.entries.get((m1, m1)) != 0.0:
                raise MannerTableError(f"nonzero diagonal for {m1}")

    def lookup(self, m1: str, m2: str) -> float:
        try:
            return self.entries[(m1, m2)]
        except KeyError:
            raise MannerTableError(f"no distance for manner pair ({m1}, {m2})") from None


def load_manner_table(path: str | Path) -> MannerDistanceTable:
    """Load ``manner1<TAB>manner2<TAB>distance`` rows; symmetric closure and a
    zero diagonal are filled in, and the result is validated complete."""
    path = Path(path)
    if not path.exists():
        raise MannerTableError(f"manner table not found: {path}")
    entries: dict[tuple[str, str], float] = {(m, m): 0.0 for m in MANNERS}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise MannerTableError(
                    f"line {lineno}: expected 'manner1<TAB>manner2<TAB>distance'"
                )
            m1, m2, text = fields
            for m in (m1, m2):
                if m not in MANNERS:
                    raise MannerTableError(f"line {lineno}: unknown manner {m!r}")
            try:
                value = float(text)
            except ValueError:
                raise MannerTableError(
                    f"line {lineno}: bad distance {text!r}"
                ) from None
            key = (m1, m2)
            if key in entries and entries[key] != value:
                raise MannerTableError(
                    f"line {lineno}: conflicting duplicate for ({m1}, {m2})"
                )
            entries[(m1, m2)] = value
            entries[(m2, m1)] = value
    return MannerDistanceTable(entries=entries, source=str(path))


def pdv(w: VowelFeatures, x: VowelFeatures, cfg: DistanceConfig) -> float:
    """Vowel-to-vowel distance in [0, 1]."""
    d_ob = abs(w.open - x.open) + abs(w.back - x.back)
    d_r = abs(w.rounded - x.rounded)
    if cfg.literal_vowel_branch:
        if d_ob > 0.5:
            return (d_ob + d_r) / 3.0
        return (d_ob + 1.0) / 3.0
    # uniform weighted Manhattan: open/back span 2 units, rounding spans 1
    return cfg.vowel_nonbinary_weight * (d_ob / 2.0) + cfg.vowel_binary_weight * d_r


def pdc(
    w: ConsonantFeatures,
    x: ConsonantFeatures,
    cfg: DistanceConfig,
    xi: MannerDistanceTable,
) -> float:
    """Consonant-to-consonant distance in [0, 1]."""
    d_mp = xi.lookup(w.manner, x.manner) + abs(w.place - x.place)
    if d_mp > cfg.alpha:
        return min(d_mp, 1.0)
    d_v = abs(w.voiced - x.voiced) * cfg.voiced_weight
    remaining = (
        abs(w.aspirated - x.aspirated)
        + abs(w.airflow - x.airflow)
        + abs(w.pharyngeal - x.pharyngeal)
    ) / 3.0
    return d_mp * cfg.consonant_pm_weight + d_v + remaining * cfg.beta


def phonetic_difference(
    a: Phone, b: Phone, cfg: DistanceConfig, xi: MannerDistanceTable
) -> float:
    """Substitution cost between two phones; identical labels cost 0."""
    if a.label == b.label:
        return 0.0
    if a.type != b.type:
        return cfg.cross_type_cost
    if a.type == CONSONANT:
        return pdc(a.features, b.features, cfg, xi)
    return pdv(a.features, b.features, cfg)


class SubstitutionCosts:
    """Memoized phone-pair substitution costs, keyed by label pair.

    One instance per (config, manner table); shareable across every distance
    computation of a run.
    """

    def __init__(self, cfg: DistanceConfig, xi: MannerDistanceTable):
        self.cfg = cfg
        self.xi = xi
        self._cache: dict[tuple[str, str], float] = {}

    def pair(self, a: Phone, b: Phone) -> float:
        key = (a.label, b.label)
        cached = self._cache.get(key)
        if cached is None:
            cached = phonetic_difference(a, b, self.cfg, self.xi)
            self._cache[key] = cached
            self._cache[(b.label, a.label)] = cached
        return cached

    def rows_for(self, phones_a, phones_b) -> dict[str, dict[str, float]]:
        """Dense label->label->cost rows for the DP inner loop."""
        uniq_a = {p.label: p for p in phones_a}
        uniq_b = {p.label: p for p in phones_b}
        return {
            la: {lb: self.pair(pa, pb) for lb, pb in uniq_b.items()}
            for la, pa in uniq_a.items()
        }
