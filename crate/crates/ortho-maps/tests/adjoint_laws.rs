//! Module-level law checks: synthesis completeness against the brute-force
//! oracle, uniqueness of adjoints up to equivalence, kernel/image duality,
//! composites, projection criteria, and the Dacey bridge.

use ortho_core::gen::{canonical_orthosets_up_to, random_orthoset, random_table};
use ortho_core::{FiniteOrthoset, Subset, DEFAULT_FAMILY_CAP};
use ortho_maps::bruteforce::{brute_force_adjoint_exhaustive, brute_force_adjoint_pruned};
use ortho_maps::{
    classify, inclusion_map, is_adjoint_pair, synthesize_adjoint, OrthoMap,
};
use rand::{Rng, SeedableRng};

fn all_tables(dom: &FiniteOrthoset, cod: &FiniteOrthoset) -> Vec<OrthoMap> {
    let mut out = Vec::new();
    let mut table = vec![0usize; dom.n()];
    loop {
        out.push(OrthoMap::new(dom.clone(), cod.clone(), table.clone()).unwrap());
        let mut pos = dom.n();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < cod.n() {
                break;
            }
            table[pos] = 0;
        }
    }
}

#[test]
fn synthesis_matches_brute_force_exhaustively_on_small_carriers() {
    let shapes = canonical_orthosets_up_to(4);
    for dom in &shapes {
        for cod in &shapes {
            for f in all_tables(dom, cod) {
                let synth = synthesize_adjoint(&f).ok();
                let brute = brute_force_adjoint_exhaustive(&f);
                assert_eq!(
                    synth.is_some(),
                    brute.is_some(),
                    "completeness mismatch on {f:?} between {dom:?} and {cod:?}"
                );
                if let (Some(pair), Some(g)) = (synth, brute) {
                    assert!(is_adjoint_pair(&f, pair.g()).unwrap());
                    // any two adjoints are equivalent
                    assert!(pair.g().equivalent_to(&g).unwrap());
                }
            }
        }
    }
}

#[test]
fn synthesis_matches_pruned_search_on_random_larger_cases() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for _ in 0..1500 {
        let nd = rng.gen_range(2..7usize);
        let nc = rng.gen_range(2..7usize);
        let dom = random_orthoset(&mut rng, nd, 0.4);
        let cod = random_orthoset(&mut rng, nc, 0.4);
        let mut table = random_table(&mut rng, nd, nc);
        table[0] = if rng.gen_bool(0.8) { 0 } else { table[0] };
        let f = OrthoMap::new(dom, cod, table).unwrap();
        let synth = synthesize_adjoint(&f).ok();
        let brute = brute_force_adjoint_pruned(&f);
        assert_eq!(synth.is_some(), brute.is_some(), "{f:?}");
        if let (Some(pair), Some(g)) = (synth, brute) {
            assert!(pair.g().equivalent_to(&g).unwrap());
        }
    }
}

#[test]
fn kernel_image_duality_holds_for_every_synthesized_pair() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let mut hits = 0;
    for _ in 0..4000 {
        let nd = rng.gen_range(2..6usize);
        let nc = rng.gen_range(2..6usize);
        let dom = random_orthoset(&mut rng, nd, 0.5);
        let cod = random_orthoset(&mut rng, nc, 0.5);
        let mut table = random_table(&mut rng, nd, nc);
        table[0] = 0;
        let f = OrthoMap::new(dom.clone(), cod.clone(), table).unwrap();
        if let Ok(pair) = synthesize_adjoint(&f) {
            hits += 1;
            assert_eq!(pair.f().kernel(), dom.complement(pair.g().image()));
            assert_eq!(pair.g().kernel(), cod.complement(pair.f().image()));
        }
    }
    assert!(hits > 100, "random sweep found too few adjointable maps: {hits}");
}

#[test]
fn projection_label_agrees_with_sasaki_composite_characterisation() {
    let mo2 = FiniteOrthoset::mo2();
    for shapes in [vec![mo2], canonical_orthosets_up_to(4)] {
        for x in &shapes {
            let atomistic_dacey = x.is_atomistic()
                && ortho_core::dacey_check(x, ortho_core::DaceyCriterion::B, DEFAULT_FAMILY_CAP)
                    .unwrap()
                    .is_dacey;
            if !atomistic_dacey {
                continue;
            }
            for f in all_tables(x, x) {
                let via_pair = synthesize_adjoint(&f)
                    .ok()
                    .map(|pair| classify(&pair).projection_onto.is_some())
                    .unwrap_or(false);
                // constructive route: p = ι ∘ σ for some Sasaki map σ onto
                // an orthoclosed subspace
                let mut via_sasaki = false;
                'outer: for a in x.orthoclosed_sets(DEFAULT_FAMILY_CAP).unwrap() {
                    let (incl, sub) = inclusion_map(x, a).unwrap();
                    for sigma in all_tables(x, &sub) {
                        let is_sasaki = is_adjoint_pair(&incl, &sigma).unwrap()
                            && (0..sub.n()).all(|i| sigma.apply(incl.apply(i)) == i);
                        if is_sasaki && OrthoMap::compose(&incl, &sigma).unwrap() == f {
                            via_sasaki = true;
                            break 'outer;
                        }
                    }
                }
                assert_eq!(via_pair, via_sasaki, "{x:?} {f:?}");
            }
        }
    }
}

#[test]
fn adjointable_inclusions_for_all_subspaces_imply_dacey() {
    use ortho_core::{dacey_check, DaceyCriterion};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
    for x in canonical_orthosets_up_to(5)
        .into_iter()
        .chain((0..150).map(|_| random_orthoset(&mut rng, 7, 0.35)))
    {
        let all_adjointable = x
            .orthoclosed_sets(DEFAULT_FAMILY_CAP)
            .unwrap()
            .into_iter()
            .all(|a| {
                let (incl, _) = inclusion_map(&x, a).unwrap();
                synthesize_adjoint(&incl).is_ok()
            });
        if all_adjointable {
            let r = dacey_check(&x, DaceyCriterion::All, DEFAULT_FAMILY_CAP).unwrap();
            assert!(r.is_dacey, "inclusions adjointable but not Dacey: {x:?}");
        }
    }
}

#[test]
fn quotient_preserves_partial_orthometry_labels() {
    let mo2 = FiniteOrthoset::mo2();
    let x = FiniteOrthoset::from_edges(6, &[(1, 3), (2, 3), (4, 5)]).unwrap();
    for src in [&mo2, &x] {
        for f in ortho_maps::all_adjointable_maps(src, src) {
            let pair = synthesize_adjoint(&f).unwrap();
            let labels = classify(&pair);
            let (pf, _, _) = ortho_maps::quotient_map(&f).unwrap();
            let qpair = synthesize_adjoint(&pf).unwrap();
            let qlabels = classify(&qpair);
            if labels.partial_orthometry {
                assert!(qlabels.partial_orthometry, "{f:?}");
            }
            if labels.orthometry {
                assert!(qlabels.orthometry, "{f:?}");
            }
        }
    }
}

#[test]
fn synthesized_witness_is_minimal() {
    let mo2 = FiniteOrthoset::mo2();
    let i2 = FiniteOrthoset::singleton_orthoset(2).unwrap();
    let f = OrthoMap::new(mo2.clone(), i2, vec![0, 1, 1, 1, 1]).unwrap();
    let err = synthesize_adjoint(&f).unwrap_err();
    assert_eq!((err.y, err.required), (1, Subset::singleton(0)));
    assert_eq!(
        err.to_string(),
        "not adjointable; witness y=1, S={0} unrealized"
    );
}
