"""Walk the two bundled example graphs through the analysis pipeline."""

from dataclasses import dataclass

from twodd.certify import certify, verify_certificate
from twodd.factors import enumerate_factors, is_closed, parity_class
from twodd.fixtures import odd_split_example, closed_pair_example
from twodd.graph_core import induced_subgraph
from twodd.quotients import quotient
from twodd.splitting import minimal_split_sets, splice_pair


@dataclass
class Config:
    max_split_size: int = 2


def split_example(cfg: Config) -> None:
    g = odd_split_example()
    print("four-AC example")
    print("  AC lengths:", g.ac_lengths(), "clean:", [ac.clean for ac in g.acs])
    sets = [sorted(s.vertices) for s in minimal_split_sets(g, cfg.max_split_size)]
    print("  minimal split sets:", sets)
    pair = next(s for s in sets if len(s) == 2)
    a, b = splice_pair(g, pair)
    print(f"  spliced pieces for {pair}:", parity_class(a), parity_class(b))
    idx = [f.index for f in enumerate_factors(g)]
    print(f"  {len(idx)} factors, minimum index {min(idx)}")
    c = certify(g)
    print("  certificate:", c.verdict, c.method, "verified:", verify_certificate(g, c))


def closed_example() -> None:
    g = closed_pair_example()
    print("two-AC example")
    print("  AC lengths:", g.ac_lengths(), "clean:", [ac.clean for ac in g.acs])
    for i in range(g.n_acs):
        print(f"  AC {i}: closed={is_closed(induced_subgraph(g, [i]))} "
              f"quotient size={len(quotient(g, [i]))}")
    print("  factor indices:", [f.index for f in enumerate_factors(g)])
    c = certify(g)
    print("  certificate:", c.verdict, c.method, c.witness, "verified:", verify_certificate(g, c))


if __name__ == "__main__":
    split_example(Config())
    closed_example()
