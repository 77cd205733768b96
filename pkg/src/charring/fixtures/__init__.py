"""Bundled character tables (exported from GAP by tools/export_tables.g).

``g768`` is SmallGroup(768, 1085354) and ``n768`` the normalizer of its
Sylow 2-subgroup, which is the Sylow subgroup itself (order 256).
"""

from pathlib import Path

FIXTURE_DIR = Path(__file__).parent


def fixture_names() -> list[str]:
    return sorted(p.stem for p in FIXTURE_DIR.glob("*.json"))


def fixture_path(name: str) -> Path:
    path = FIXTURE_DIR / f"{name}.json"
    if not path.exists():
        raise KeyError(f"no fixture named {name!r}")
    return path


def load_fixture(name: str):
    from ..chartab import load_table

    return load_table(fixture_path(name))
