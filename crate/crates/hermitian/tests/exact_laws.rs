//! Randomized exact-arithmetic law checks: adjoint involution and
//! contravariance, orthomodularity of random subspaces, projector calculus,
//! and the orthoset-adjoint bridge.

use hermitian::{
    classify_linear, is_adjoint_pair, verify_orthomodular, Gaussian, HermitianSpace, LinearMap,
    Matrix, Rational, Scalar, Subspace,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-6i64..=6);
    let den = rng.gen_range(1i64..=4);
    Rational::new(num.into(), den.into())
}

fn rand_gaussian(rng: &mut ChaCha8Rng) -> Gaussian {
    Gaussian::new(rand_rational(rng), rand_rational(rng))
}

fn rand_matrix<K: Scalar>(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    gen: &mut impl FnMut(&mut ChaCha8Rng) -> K,
) -> Matrix<K> {
    Matrix::from_rows((0..rows).map(|_| (0..cols).map(|_| gen(rng)).collect()).collect()).unwrap()
}

/// A random positive-definite Gram: AᴴA + I for random A.
fn rand_gram<K: Scalar>(
    rng: &mut ChaCha8Rng,
    n: usize,
    gen: &mut impl FnMut(&mut ChaCha8Rng) -> K,
) -> Matrix<K> {
    let a = rand_matrix(rng, n, n, gen);
    a.conj_transpose()
        .mul(&a)
        .unwrap()
        .add(&Matrix::identity(n))
        .unwrap()
}

fn rand_subspace<K: Scalar>(
    rng: &mut ChaCha8Rng,
    h: &HermitianSpace<K>,
    gen: &mut impl FnMut(&mut ChaCha8Rng) -> K,
) -> Subspace<K> {
    let k = rng.gen_range(0..=h.dim());
    let vectors: Vec<Vec<K>> = (0..k)
        .map(|_| (0..h.dim()).map(|_| gen(rng)).collect())
        .collect();
    h.span(&vectors).unwrap()
}

#[test]
fn adjoint_involution_and_contravariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..150 {
        let n = rng.gen_range(1..5usize);
        let m = rng.gen_range(1..5usize);
        let h1 = HermitianSpace::new(rand_gram(&mut rng, n, &mut rand_gaussian)).unwrap();
        let h2 = HermitianSpace::new(rand_gram(&mut rng, m, &mut rand_gaussian)).unwrap();
        let phi = LinearMap::new(h1.clone(), h2.clone(), rand_matrix(&mut rng, m, n, &mut rand_gaussian)).unwrap();
        let psi = LinearMap::new(h2.clone(), h1.clone(), rand_matrix(&mut rng, n, m, &mut rand_gaussian)).unwrap();

        assert_eq!(phi.adjoint().adjoint(), phi, "(φ*)* = φ");
        let comp = LinearMap::compose(&psi, &phi).unwrap();
        assert_eq!(
            comp.adjoint(),
            LinearMap::compose(&phi.adjoint(), &psi.adjoint()).unwrap(),
            "(ψ∘φ)* = φ*∘ψ*"
        );
        assert!(LinearMap::identity(&h1).adjoint().is_identity());
    }
}

#[test]
fn orthomodularity_of_random_subspaces() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..60 {
        let n = rng.gen_range(1..6usize);
        let hq = HermitianSpace::new(rand_gram(&mut rng, n, &mut rand_rational)).unwrap();
        let sample: Vec<_> = (0..10).map(|_| rand_subspace(&mut rng, &hq, &mut rand_rational)).collect();
        let report = verify_orthomodular(&hq, &sample);
        assert!(report.passed());
        for s in &sample {
            let c = hq.orthocomplement(s);
            assert_eq!(s.dim() + c.dim(), n);
            assert_eq!(s.intersect(&c).dim(), 0);
            assert_eq!(hq.orthocomplement(&c), *s, "(S⊥)⊥ = S");
        }

        let hg = HermitianSpace::new(rand_gram(&mut rng, n, &mut rand_gaussian)).unwrap();
        let sample: Vec<_> = (0..10).map(|_| rand_subspace(&mut rng, &hg, &mut rand_gaussian)).collect();
        assert!(verify_orthomodular(&hg, &sample).passed());
    }
}

#[test]
fn projector_calculus_over_random_grams() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..40 {
        let n = rng.gen_range(1..5usize);
        let h = HermitianSpace::new(rand_gram(&mut rng, n, &mut rand_gaussian)).unwrap();
        let s = rand_subspace(&mut rng, &h, &mut rand_gaussian);
        let p = h.projector(&s).unwrap();
        let pmap = LinearMap::new(h.clone(), h.clone(), p.clone()).unwrap();

        assert_eq!(p.mul(&p).unwrap(), p, "π² = π");
        assert_eq!(pmap.adjoint().matrix(), &p, "π* = π under the form");
        assert_eq!(pmap.image(), s, "im π = S");
        let q = h.projector(&h.orthocomplement(&s)).unwrap();
        assert_eq!(p.add(&q).unwrap(), Matrix::identity(n), "id − π = π⊥");
        assert!(classify_linear(&pmap).projection_onto.is_some());
    }
}

#[test]
fn adjoint_biconditional_bridge_on_random_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..100 {
        let n = rng.gen_range(1..5usize);
        let h = HermitianSpace::new(rand_gram(&mut rng, n, &mut rand_gaussian)).unwrap();
        let phi = LinearMap::new(h.clone(), h.clone(), rand_matrix(&mut rng, n, n, &mut rand_gaussian)).unwrap();
        let adj = phi.adjoint();
        assert!(is_adjoint_pair(&phi, &adj).unwrap());
        for _ in 0..20 {
            let u: Vec<Gaussian> = (0..n).map(|_| rand_gaussian(&mut rng)).collect();
            let v: Vec<Gaussian> = (0..n).map(|_| rand_gaussian(&mut rng)).collect();
            let lhs = h.inner(&phi.apply(&u).unwrap(), &v).unwrap();
            let rhs = h.inner(&u, &adj.apply(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "⟨φu, v⟩ = ⟨u, φ*v⟩ exactly");
            assert_eq!(lhs.is_zero(), rhs.is_zero(), "orthogonality biconditional");
        }
    }
}

#[test]
fn line_map_functoriality_on_random_lists() {
    use hermitian::{induced_line_map, Line};
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for _ in 0..50 {
        let n = rng.gen_range(1..4usize);
        let h = HermitianSpace::<Gaussian>::standard(n);
        let phi = LinearMap::new(h.clone(), h.clone(), rand_matrix(&mut rng, n, n, &mut rand_gaussian)).unwrap();
        let psi = LinearMap::new(h.clone(), h.clone(), rand_matrix(&mut rng, n, n, &mut rand_gaussian)).unwrap();
        let lines: Vec<Line<Gaussian>> = (0..5)
            .map(|_| {
                let v: Vec<Gaussian> = (0..n).map(|_| rand_gaussian(&mut rng)).collect();
                Line::through(&v)
            })
            .collect();
        let composed = LinearMap::compose(&psi, &phi).unwrap();
        let one_shot = induced_line_map(&composed, &lines).unwrap();
        let two_step = induced_line_map(&psi, &induced_line_map(&phi, &lines).unwrap()).unwrap();
        assert_eq!(one_shot, two_step);
    }
}
