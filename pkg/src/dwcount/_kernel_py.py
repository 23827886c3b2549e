"""Pure-Python accumulation kernel (reference and fallback).

Same contract as the compiled ``_ckernel.accumulate_dw``: returns the
unreduced length-m^2 coefficient vector of

    sum_{h, s in Z/m} prod_j sum_{z : a_j z = h (mod m)} zeta_{m^2}^E(l, h, s, z)

with E = l a_j b_j z^2 - (2 l h + m s) b_j z, all residues lifted to 0..m-1.
"""


def accumulate_dw(m, l, pairs):
    N = m * m
    l %= m
    total = [0] * N
    # exponent only depends on a, b mod N; congruence on a mod m
    red = [(a % N, b % N, a % m) for a, b in pairs]
    for h in range(m):
        sols = []
        for _, _, am in red:
            zs = [z for z in range(m) if (am * z - h) % m == 0]
            if not zs:
                break
            sols.append(zs)
        else:
            quad = [[l * aN * bN * z * z for z in zs] for (aN, bN, _), zs in zip(red, sols)]
            for s in range(m):
                lin = 2 * l * h + m * s
                cur = {0: 1}
                for (_, bN, _), zs, qs in zip(red, sols, quad):
                    exps = [(q - lin * bN * z) % N for z, q in zip(zs, qs)]
                    nxt = {}
                    for e, c in cur.items():
                        for E in exps:
                            k = e + E
                            if k >= N:
                                k -= N
                            nxt[k] = nxt.get(k, 0) + c
                    cur = nxt
                for e, c in cur.items():
                    total[e] += c
    return total


def twist_sums(vectors, m, ks, sign):
    """For each k in ``ks``: sum_l zeta_{m^2}^(sign m k l) * vectors[l].

    ``vectors[l]`` are length-m^2 coefficient vectors; multiplying by a root
    of unity is a cyclic rotation.
    """
    N = m * m
    out = []
    for k in ks:
        acc = [0] * N
        for l, v in enumerate(vectors):
            shift = (sign * m * k * l) % N
            rotated = v[-shift:] + v[:-shift] if shift else v
            acc = [x + y for x, y in zip(acc, rotated)]
        out.append(acc)
    return out
