"""
A tour of the affine-fock command line
======================================

Every subcommand prints a single deterministic JSON object (or short pretty
text) and signals problems through exit codes, so the tool can sit inside
shell pipelines and CI jobs. This demo drives the same entry point the
console script uses.
"""

from affine_fock import cli


def run(*argv):
    print("$ affine-fock " + " ".join(argv))
    code = cli.main(list(argv))
    print(f"(exit {code})")
    print()
    return code


# The bijection, forward and backward.
run("core-quotient", "--l", "2", "--lambda", "[2,1]")
run("core-quotient", "--l", "2", "--inverse", "--c", "[1,-1]", "--q", "[[1],[]]")

# One generator applied to one basis vector, in any of the three
# realizations; the output is diffable across sides.
run("act", "--g", "e_1", "--lambda", "[2,1]", "--l", "2", "--side", "explicit")
run("act", "--g", "e_1", "--lambda", "[2,1]", "--l", "2", "--side", "frenkel-kac")
run("act", "--g", "e_1", "--lambda", "[2,1]", "--l", "2", "--side", "geometric")

# Pretty mode for eyeballs rather than pipelines.
run("act", "--g", "f_0", "--lambda", "[2,1]", "--l", "2", "--pretty")

# Operator matrices on a degree slice, JSON or CSV.
run("matrix", "--g", "h_1", "--l", "2", "--degree", "2", "--format", "csv")

# Consistency suites; exit 0 when everything matches.
run("verify", "--suite", "fixed-points", "--l", "3", "--degree", "8")

# Constraint violations use a dedicated exit code.
code = run("core-quotient", "--l", "2", "--inverse", "--c", "[1,0]", "--q", "[[],[]]")
assert code == 3
