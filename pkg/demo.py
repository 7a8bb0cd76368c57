from hyperfactor.core.fileformat import serialize
from hyperfactor.core.hypergraph import product_of
from hyperfactor.core.pipeline import Factorizer
from hyperfactor.core.types import FactorizationConfig, GeneratorConfig
from hyperfactor.oracle.generators import random_product
from hyperfactor.resources.figures import fig1, fig2, m2


def header(title):
    print(f"\n{'=' * 60}")
    print(f"   🧩 {title}")
    print(f"{'=' * 60}")


def run_case(name, factorizer, h):
    print(f"\n>> 🧪 Case: {name}  (n={h.n}, m={h.m}, r={h.rank})")
    print("-" * 60)
    try:
        result = factorizer.factorize(h)
    except Exception as e:
        print(f"❌ ERROR: {e}")
        return
    aux = result.aux
    if aux is not None:
        print(f"G_aux edges: {sorted(aux.edges)}")
        for t in aux.triggers:
            tail, head = h.arc_names(t.arc)
            print(f"   missing inc({set(tail)} -> {set(head)}, {t.increment})")
    print(f"partition: {result.partition}")
    for s, factor in enumerate(result.factors, start=1):
        print(f"--- factor {s}")
        print(serialize(factor), end="")
    print("." * 40)


# --- Worked examples ---
cases = {
    "🔷 Prime hypergraph on K4 x K2": fig1(),
    "🔶 Its product with a single hyperedge": fig2(),
    "🔗 Single undirected hyperedge": m2(),
    "🧱 Three-fold product": product_of(m2(), m2(), fig1()),
}


if __name__ == "__main__":
    header("WORKED EXAMPLES")
    factorizer = Factorizer(FactorizationConfig(debug_checks=True))
    for name, h in cases.items():
        run_case(name, factorizer, h)

    header("RANDOM PRODUCTS")
    for seed in range(3):
        h, factors = random_product(GeneratorConfig(seed=seed, n=5), 2)
        run_case(f"🎲 seed {seed}, factor sizes {[f.n for f in factors]}", factorizer, h)

    print("\n✅ Demo Complete.")
