"""The class rules, the generated network and the stored D1..D6."""
from submanet import SubmanifoldClass, derivation_report, fixture, generate_network, rule_base
from submanet.submanifolds import normalize, rule_holds

for rule in rule_base():
    print(f"{str(rule):70s} {rule_holds(rule)}")

print(normalize(SubmanifoldClass.BI_SLANT.structure))

full = generate_network()
print("all classes:", full.order, "vertices,", full.size, "arcs")

small = generate_network(["HOLOMORPHIC", "CR", "ANTI_INVARIANT", "SLANT"])
print("same as D1:", small == generate_network(arc_policy="FIXTURE(D1)"))

rep = derivation_report(fixture("D5").digraph)
print("underivable:", sorted(rep.underivable))
print("non-generative:", sorted(rep.non_generative))
print("v7 derives:", sorted(rep.derives["v7"]))
