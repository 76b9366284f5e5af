#!/usr/bin/env python3
"""
Short tour of the quasi-homogenization pipeline.
Normalizes a contracting map, extracts weighted homogeneous generators of an
invariant ideal and reduces the embedding dimension of a space curve.
"""

from src import PipelineOptions, quasi_homogenize, reduce_embedding, setup_environment
from src.invariant.cofactors import IdealPresentation
from src.normalform.poincare_dulac import poincare_dulac, spectrum_of
from src.polyring.parsing import format_polynomial, parse_polynomial
from src.polyring.polynomial import PolyMap
from src.spectrum.lattice import weight_vector
from src.spectrum.resonance import resonance_bound

XY = ("x", "y")
XYZ = ("x", "y", "z")


def polys(variables, *texts):
    return [parse_polynomial(text, variables) for text in texts]


def show(polynomials, variables=XY):
    return ", ".join(format_polynomial(P, variables) for P in polynomials)


def main():
    """Run the quasi-homogenization demo."""
    print("🚀 Starting quasihom demo")
    print("=" * 50)

    # 1. Setup and Configuration
    print("\n1. Setting up environment...")
    setup_environment()
    print("✅ Environment configured")

    # 2. Spectrum of a contracting map
    print("\n2. Reading the spectrum of F = (x/2, y/4 + x^3)...")
    F = PolyMap(polys(XY, "x/2", "y/4 + x^3"))
    spectrum = spectrum_of(F)
    print(f"✅ Spectrum: {', '.join(str(z) for z in spectrum.entries)}")
    print(f"✅ Weights: {weight_vector(spectrum)}")
    print(f"✅ Resonance bound: {resonance_bound(spectrum)}")

    # 3. Poincare-Dulac normal form
    print("\n3. Computing the normal form...")
    cert = poincare_dulac(F, 4)
    print(f"✅ Normal form:  ({show(cert.normalized)})")
    print(f"✅ Conjugacy H:  ({show(cert.conjugacy)})")

    # 4. Weighted homogeneous generators
    print("\n4. Quasi-homogenizing an invariant ideal...")
    ideal = IdealPresentation(polys(XY, "x^2 - y", "x*(x^2 - y) + x^5"), 2)
    result = quasi_homogenize(ideal, PolyMap(polys(XY, "x/2", "y/4")), PipelineOptions())
    print(f"✅ Generators P: {show(result.generators_P)}")
    print(f"✅ Classes:      {[c.representative for c in result.classes]}")
    print(f"✅ Degrees:      {result.degrees} for weights {result.weights}")
    print(f"✅ Truncation:   N = {result.truncation_degree}")
    print(f"✅ Filtration holds: {result.filtration.holds}")

    # 5. Embedding reduction
    print("\n5. Reducing the embedding dimension of (y - x^2, z^2 - x^3)...")
    curve = IdealPresentation(polys(XYZ, "y - x^2", "z^2 - x^3"), 3)
    reduction = reduce_embedding(curve, 6)
    remaining = tuple(XYZ[k] for k in reduction.variables)
    print(f"✅ Embedding dimension: {reduction.embedding_dimension}")
    print(f"✅ Reduced ideal: ({show(reduction.reduced, remaining)}) in {remaining}")

    print("\n🎉 Demo completed successfully!")
    print("=" * 50)


if __name__ == "__main__":
    main()
