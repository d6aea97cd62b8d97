"""
Documents, DOT export and the command line
==========================================
"""
import tempfile
from pathlib import Path

from ordplex import export_dot, gen_random_ordered_flag, parse_complex, serialize_complex
from ordplex.cli import main

oc = gen_random_ordered_flag(5, seed=7)
text = serialize_complex(oc, name="random five")
print(text)
assert serialize_complex(parse_complex(text), name="random five") == text

print(export_dot(oc.complex, "random five"))

# the same operations from the command line
with tempfile.TemporaryDirectory() as tmp:
    doc = Path(tmp) / "k.json"
    main(["gen", "--vertices", "4", "--seed", "3", "-o", str(doc)])
    main(["validate", str(doc)])
    main(["consum", str(doc), "EDGE", "--window", "-1:1"])
    main(["dist", "PATH:5", "p0", "p4"])
    main(["realize", "EDGE", "POINT", "--p1", "a:1/2,b:1/2", "--p2", "v0", "--r", "-1/3", "--window", "-2:2"])
