#!/usr/bin/env python3
"""Exit codes, DOT styling and repeatability of the mckay command."""

import re
import subprocess
import sys

cli = sys.argv[1]
failures = []


def run(*argv):
    return subprocess.run([cli, *argv], capture_output=True, text=True)


def expect(cond, what):
    if not cond:
        failures.append(what)


# exit codes: 0 success, 1 failed check, 2 usage
expect(run("verify", "--kind", "cyclic", "-n", "4").returncode == 0, "verify C~4 exit 0")
expect(run("group", "--kind", "nonsense").returncode == 2, "unknown kind exit 2")
expect(run("verify", "--kind", "cyclic", "-n", "2", "--samples", "1:0", "0:1", "1:z^").returncode == 2,
       "malformed parameter exit 2")
expect(run("verify", "--kind", "cyclic", "-n", "2", "--samples", "1:1").returncode == 2, "missing endpoints exit 2")
expect(run("frobnicate").returncode == 2, "unknown subcommand exit 2")
expect(run("contract", "--kind", "cyclic", "-n", "2", "--gen", "x", "--gen", "y^3").returncode == 1,
       "non-cluster contraction exit 1")
expect(run("coinv", "--kind", "octahedral", "--binary").returncode == 2, "octahedral needs --slow")
expect(run("coinv", "--kind", "cyclic", "-n", "2", "--binary", "--dim", "3").returncode == 2, "--binary with --dim 3")

# DOT: chain of 7 with pure and binary vertices alternating along the two arms
dot = run("quiver", "--kind", "cyclic", "-n", "4", "--binary", "--reduced", "--emit", "dot")
expect(dot.returncode == 0, "dot exit 0")
fills = dict(re.findall(r"(v\d+) \[label=\"[^\"]*\", style=(\w+)", dot.stdout))
edges = re.findall(r"(v\d+) -- (v\d+);", dot.stdout)
expect(len(fills) == 7 and len(edges) == 6, "C~4 reduced quiver has 7 vertices and 6 edges")
expect(all(fills[a] != fills[b] for a, b in edges), "adjacent vertices have different fills")
expect(sum(1 for s in fills.values() if s == "filled") == 4, "four filled (binary) vertices")
degree = {v: 0 for v in fills}
for a, b in edges:
    degree[a] += 1
    degree[b] += 1
expect(sorted(degree.values()) == [1, 1, 2, 2, 2, 2, 2], "the quiver is a path")

# text summary
summary = run("group", "--kind", "icosahedral", "--binary", "--emit", "text").stdout
expect("order 120" in summary, "I~ summary shows order 120")

# same config, same bytes
a = run("verify", "--kind", "tetrahedral", "--binary").stdout
b = run("verify", "--kind", "tetrahedral", "--binary").stdout
expect(a == b and len(a) > 0, "verify output repeatable")
a = run("curves", "--kind", "dihedral", "-n", "3", "--dim", "3").stdout
b = run("curves", "--kind", "dihedral", "-n", "3", "--dim", "3").stdout
expect(a == b and len(a) > 0, "curves output repeatable")

for f in failures:
    print("FAIL", f)
print("PASS" if not failures else f"{len(failures)} failures")
sys.exit(1 if failures else 0)
