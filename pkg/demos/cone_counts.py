"""Count hyperbolicity cones for a few classic polynomials and compare with the bound."""

from hypercone import constructions as C
from hypercone.arrangement import chambers
from hypercone.hyperbolicity import count_cones, upper_bound
from hypercone.polytext import parse_poly


def main():
    for text in ["z1*z2", "z1^2 - z2^2", "z1^2 + z2^2", "z1*(z1 - z2)*(z1 + 2*z2)"]:
        rep = count_cones(parse_poly(text, 2))
        print(f"{text:28s} {rep.count} cones ({rep.method.value})")
    for name in ["lorentz", "pauli_pencil", "coordinate_product"]:
        entry = C.build(name, **({"n": 3} if name != "pauli_pencil" else {}))
        print(f"{name:28s} {count_cones(entry.target).count} cones")
    print("\ngeneric products of d linear forms in n variables reach the bound:")
    for n, d in [(2, 4), (3, 3), (3, 5), (4, 4)]:
        fs = C.random_independent_linear(n, d, seed=1)
        print(f"  n={n} d={d}: {len(chambers(fs))} chambers, bound {upper_bound(n, d)}")


if __name__ == "__main__":
    main()
