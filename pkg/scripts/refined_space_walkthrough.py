"""Walk the symbolic machinery end to end and print every certificate.

Usage: python scripts/refined_space_walkthrough.py [--family-size 8] [--chain 10]
"""
import argparse
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from revtop.descriptors import (
    STAR,
    CofiniteSet,
    DifferenceSet,
    FiniteSet,
    OmegaStarSet,
    descriptor_to_json,
    nf,
    nf_enumerate,
)
from revtop.symbolic import (
    ConvSeq,
    EnumerationTail,
    EventualSequence,
    OrderedZ,
    ad_family,
    blocking_nbhd,
    construct_o_star,
    converges,
    increasing_chain,
    star_in_closure_check,
)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--family-size", type=int, default=8)
    parser.add_argument("--chain", type=int, default=10)
    args = parser.parse_args()

    print("== ordered-line witness chain ==")
    chain = increasing_chain(OrderedZ(0), args.chain)
    for w in chain:
        print(json.dumps(w.to_json(), sort_keys=True))
    print(f"all verified: {all(w.verify() for w in chain)}")

    print("\n== almost-disjoint branch family ==")
    fam = ad_family(args.family_size)
    for i, member in enumerate(fam.members):
        first = nf_enumerate(nf(member), 6)
        print(f"member {i}: word={member.word.prefix!r}+({member.word.period!r})* "
              f"elements={first}...")
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            size = fam.intersection_size(i, j)
            if size:
                print(f"  |M_{i} & M_{j}| = {size}")

    print("\n== limit point stays in the closure of the naturals ==")
    refined = construct_o_star(fam)
    nbhd = OmegaStarSet(CofiniteSet(tuple(range(12))), star=True)
    witness = star_in_closure_check(fam, (0, 1), nbhd)
    print(f"blocked={{0,1}} neighborhood=cofinite(0..11) -> "
          f"beta={witness.beta} element={witness.element} verified={witness.verify()}")

    print("\n== blocking neighborhoods flip convergence ==")
    for idx in (0, len(fam) // 2):
        member = fam.members[idx]
        candidate = DifferenceSet(member, FiniteSet(nf_enumerate(nf(member), 2)))
        cert = blocking_nbhd(candidate, fam)
        seq = EventualSequence((), EnumerationTail(candidate))
        base = converges(seq, STAR, ConvSeq())
        after = converges(seq, STAR, refined)
        print(f"candidate=member {idx} minus 2 elements: blocker={cert.index} "
              f"overlap={cert.intersection_prefix} "
              f"converges base={base} refined={after} verified={cert.verify()}")
        print(f"  candidate json: {json.dumps(descriptor_to_json(candidate), sort_keys=True)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
