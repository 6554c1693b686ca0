"""Resolution of bundled data files.

Lookup order for each default: an explicit CLI flag wins, then a file of the
same name inside the directory named by the PEDLEX_DATA environment variable,
then the copy bundled with the package.
"""

from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path

DATA_ENV_VAR = "PEDLEX_DATA"

_BUNDLED_DIR = Path(__file__).parent / "data"

INVENTORY_FILE = "inventory.tsv"
MANNER_TABLE_FILE = "manner_distance.tsv"
G2P_FILES = {
    "perso-arabic": "g2p_perso_arabic.tsv",
    "devanagari": "g2p_devanagari.tsv",
}


def resolve_data_file(filename: str) -> Path:
    env_dir = os.environ.get(DATA_ENV_VAR)
    if env_dir:
        candidate = Path(env_dir) / filename
        if candidate.exists():
            return candidate
    return _BUNDLED_DIR / filename


def default_inventory_path() -> Path:
    return resolve_data_file(INVENTORY_FILE)


def default_manner_table_path() -> Path:
    return resolve_data_file(MANNER_TABLE_FILE)


def default_g2p_table_path(script: str) -> Path:
    try:
        return resolve_data_file(G2P_FILES[script])
    except KeyError:
        raise KeyError(f"no bundled G2P table for script {script!r}") from None


@lru_cache(maxsize=None)
def default_inventory():
    from .features import load_inventory

    return load_inventory(default_inventory_path())


@lru_cache(maxsize=None)
def default_manner_table():
    from .distance import load_manner_table

    return load_manner_table(default_manner_table_path())
