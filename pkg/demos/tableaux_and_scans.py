"""Tableau counts, their determinant formulas, and the certificate engine.

Run with: python3 demos/tableaux_and_scans.py
"""

from reciprocity import tableaux as tab
from reciprocity import verify as vf

# odd rows increasing strictly, even offsets decreasing strictly: the determinant applies
shape = tab.TableauShape((3, 5), (2, 0))
for k in range(1, 5):
    print(f"k = {k}: tableaux {tab.tableau_gf(shape, k)}, determinant {tab.tableau_gf_determinant(shape, k)}")

print("\none certificate, as emitted by `reciprocity verify`:")
print(vf.run_check("thm15", {"n": 1, "k": 1, "m": 1}).to_json())

print("\na conjecture scan; points outside the domain are reported as skipped")
for c in vf.scan_conjecture("53", 2, 2, 2):
    status = "SKIP" if c.verdict is None else ("PASS" if c.verdict else "FAIL")
    print(f"  {status} {c.params} {c.skipped or ''}")
