# All solvable primitive groups of degree l^n, for the small degrees.
import tempfile
from pathlib import Path

from primex.classify import solvable_primitive_groups, write_enumeration

for l, n in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]:
    entries = solvable_primitive_groups(l, n)
    print(f"degree {l ** n}: {len(entries)} groups -", ", ".join(f"{e.label} ({e.order})" for e in entries))

# The enumeration can be written out as group files plus a manifest.
with tempfile.TemporaryDirectory() as tmp:
    manifest = write_enumeration(solvable_primitive_groups(2, 2), tmp, 2, 2)
    for item in manifest["entries"]:
        print(item["file"], item["label"], "linear parts", item["rep_matrices"])
    print((Path(tmp) / manifest["entries"][0]["file"]).read_text())
