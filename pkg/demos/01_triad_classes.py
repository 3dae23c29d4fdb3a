"""The 16 directed triad classes and which friend-of-friend rules they obey."""
from triadic.triads import TRIAD_CLASSES, Motto, motto_profile, motto_witnesses

# each class with its size (number of labelled versions) and the M1-M4 profile
print("class code  size  M1 M2 M3 M4")
for c in TRIAD_CLASSES:
    yn = "  ".join(motto_profile(c.representative).as_yn())
    print(f"{c.index:5d} {c.code:5s} {c.size:4d}   {yn}")

# only two classes satisfy everything: one mutual pair, or all three mutual
balanced = [c.code for c in TRIAD_CLASSES if all(motto_profile(c.representative))]
print("balanced classes:", balanced)

# class 7 is A<->B plus C->B.  C likes B and B likes A, but C does not like A
t = TRIAD_CLASSES[6].representative
print(t.arcs)
for m in Motto:
    print(m.name, "fails on", motto_witnesses(t, m))
