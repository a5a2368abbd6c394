use crate::orthoset::FiniteOrthoset;
use crate::subset::Subset;

/// The irredundant quotient together with the projection of elements onto
/// class indices. Classes are numbered by least representative, so the class
/// of the falsity is 0.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub quotient: FiniteOrthoset,
    pub class_of: Vec<usize>,
}

/// Partitions the elements by equal orthocomplement rows and induces the
/// orthogonality relation on the classes. The result is irredundant and has
/// the same rank.
pub fn irredundant_quotient(x: &FiniteOrthoset) -> Quotient {
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = vec![0usize; x.n()];
    for e in x.elements() {
        match reps.iter().position(|&r| x.row(r) == x.row(e)) {
            Some(c) => class_of[e] = c,
            None => {
                class_of[e] = reps.len();
                reps.push(e);
            }
        }
    }
    let mut edges = Vec::new();
    for (c, &r) in reps.iter().enumerate() {
        for (d, &s) in reps.iter().enumerate().skip(c + 1) {
            if c != 0 && x.orthogonal(r, s) {
                edges.push((c, d));
            }
        }
    }
    let quotient = FiniteOrthoset::from_edges(reps.len(), &edges)
        .expect("quotient of a valid orthoset is valid");
    debug_assert!(quotient.is_irredundant());
    Quotient { quotient, class_of }
}

impl Quotient {
    /// Pushes a subset of the original carrier down to class indices.
    pub fn push_subset(&self, a: Subset) -> Subset {
        Subset::from_indices(a.iter().map(|e| self.class_of[e]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthoset::DEFAULT_FAMILY_CAP;
    use crate::rank::rank;

    #[test]
    fn collapses_parallel_elements() {
        let x = FiniteOrthoset::from_edges(4, &[(1, 3), (2, 3)]).unwrap();
        let q = irredundant_quotient(&x);
        assert_eq!(q.quotient.n(), 3);
        assert_eq!(q.class_of, vec![0, 1, 1, 2]);
        assert_eq!(q.quotient.proper_edges(), vec![(1, 2)]);
    }

    #[test]
    fn irredundant_orthosets_are_fixed_points() {
        let mo2 = FiniteOrthoset::mo2();
        let q = irredundant_quotient(&mo2);
        assert_eq!(q.quotient, mo2);
        assert_eq!(q.class_of, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn large_singleton_collapses_to_i2() {
        let i3 = FiniteOrthoset::singleton_orthoset(3).unwrap();
        let q = irredundant_quotient(&i3);
        assert_eq!(q.quotient.n(), 2);
        assert_eq!(q.class_of, vec![0, 1, 1]);
    }

    #[test]
    fn quotient_preserves_rank() {
        for (n, edges) in [
            (4usize, vec![(1usize, 3usize), (2, 3)]),
            (6, vec![(1, 2), (3, 4), (3, 5)]),
            (3, vec![]),
        ] {
            let x = FiniteOrthoset::from_edges(n, &edges).unwrap();
            let q = irredundant_quotient(&x);
            assert_eq!(
                rank(&x, DEFAULT_FAMILY_CAP).value,
                rank(&q.quotient, DEFAULT_FAMILY_CAP).value
            );
        }
    }
}
