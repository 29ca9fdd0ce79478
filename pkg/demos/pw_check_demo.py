"""
Weight versus perverse filtration
=================================

Runs the full check and prints a short summary instead of the whole report.
"""

from pwlab.pw import pw_check

for g, degD in [(2, 2), (2, 3), (3, 4)]:
    rep = pw_check(g, degD, gl2=True)
    equal = sum(r["equal"] for r in rep.filtration)
    print(f"g={g} deg D={degD}: {equal}/{len(rep.filtration)} (degree, level) pairs agree")
    print("  generator levels:", sorted(set(rep.generators.values())))
    print("  epsilon level in the GL2 table:", rep.gl2["epsilon_level"])
    if rep.survivors:
        print("  survivor checks:", all(rep.survivors.values()))
    print("  overall:", "pass" if rep.passed else "FAIL")
