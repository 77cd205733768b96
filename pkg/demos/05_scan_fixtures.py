"""
Tabulating all bundled tables
=============================
"""

from charring.cli import cmd_scan, format_rows
from charring.fixtures import FIXTURE_DIR

rows, errors = cmd_scan(FIXTURE_DIR)  # every prime dividing each order
print(format_rows(rows, "csv"), end="")

# Principal blocks whose Loewy length is below their dimension
for r in rows:
    if r["principal_loewy_length"] < r["principal_dim"]:
        print(f"{r['name']} p={r['p']}: dim {r['principal_dim']}, length {r['principal_loewy_length']}")
