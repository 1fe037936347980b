"""Mine the basis of the class generated by a depth-k stack and an infinite stack.

Prints the basis elements found at each length, then checks the lifting
construction sigma -> (sigma + 3) 213 on every element found for depth k
against the depth k+1 class.

    python scripts/mine_bases.py --depth1 1 --max-len 7
"""

import argparse

from twostack.basis import lemma1_extend, mine_basis
from twostack.machine import MachineConfig, is_generable
from twostack.perm import delete_entry, format_perm


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--depth1", type=int, default=1)
    parser.add_argument("--max-len", type=int, default=7)
    args = parser.parse_args()
    here = MachineConfig(depth1=args.depth1)
    deeper = MachineConfig(depth1=args.depth1 + 1)

    found = []
    for n in range(1, args.max_len + 1):
        layer = mine_basis(lambda p: is_generable(p, here), n)
        print(f"depth1={args.depth1} length {n}: {' '.join(map(format_perm, layer)) or '-'}")
        found.extend(layer)

    for sigma in found:
        if not is_generable(sigma, deeper):
            print(f"{format_perm(sigma)} stays a basis element at depth1={args.depth1 + 1}")
            continue
        lifted = lemma1_extend(sigma)
        minimal = not is_generable(lifted, deeper) and all(
            is_generable(delete_entry(lifted, i), deeper) for i in range(1, len(lifted) + 1))
        print(f"{format_perm(sigma)} -> {format_perm(lifted)}: "
              f"{'basis element' if minimal else 'NOT a basis element'} at depth1={args.depth1 + 1}")


if __name__ == "__main__":
    main()
