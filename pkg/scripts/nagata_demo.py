"""Print the Nagata automorphism three ways and check they agree."""

from polyaut.autcore import compose_all, embed_3var, verify_inverse
from polyaut.derivation import Derivation, exp_map
from polyaut.polycore import X, Y, Z
from polyaut.tame import SWAP, classify, nagata
from polyaut.textio import print_canonical, print_map


def main():
    data = nagata()
    c = data.construction
    via_exp = exp_map(Derivation.from_images(-2 * Y, Z), X * Z + Y**2)
    via_pair = compose_all(SWAP, embed_3var(c.F), SWAP)
    print("sigma      ", print_map(data.sigma))
    print("exp(sD)    ", "agrees" if via_exp == data.sigma else "DIFFERS")
    print("swap-pair  ", "agrees" if via_pair == data.sigma else "DIFFERS")
    print("f2         ", print_canonical(c.f2))
    print("g2         ", print_canonical(c.g2))
    print("inverse ok ", verify_inverse(c.F, c.G))
    v = classify(c.input.p, c.input.a, c.input.b)
    print("verdict    ", v.verdict.value, "d1 =", v.d1)


if __name__ == "__main__":
    main()
