//! Direct products, used to compare two generated groups generator by generator.

use super::Group;

/// `A x B` with componentwise multiplication.
#[derive(Debug, Clone)]
pub struct ProductGroup<A: Group, B: Group> {
    pub left: A,
    pub right: B,
}

impl<A: Group, B: Group> Group for ProductGroup<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn identity(&self) -> Self::Elem {
        (self.left.identity(), self.right.identity())
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.mul(&a.0, &b.0), self.right.mul(&a.1, &b.1))
    }

    fn inverse(&self, a: &Self::Elem) -> Self::Elem {
        (self.left.inverse(&a.0), self.right.inverse(&a.1))
    }
}

/// Whether `g_i ↦ h_i` extends to an isomorphism `<g> -> <h>`: the diagonal
/// subgroup `<(g_i, h_i)>` projects bijectively onto both factors exactly
/// when all three orders agree. `None` when an enumeration exceeds `cap`.
pub fn generators_match<A: Group, B: Group>(
    left: A,
    g: &[A::Elem],
    right: B,
    h: &[B::Elem],
    cap: usize,
) -> Option<(usize, usize, usize)> {
    assert_eq!(g.len(), h.len());
    let ol = super::closure(&left, g, cap).ok()?.len();
    let or = super::closure(&right, h, cap).ok()?.len();
    let pairs: Vec<(A::Elem, B::Elem)> = g.iter().cloned().zip(h.iter().cloned()).collect();
    let p = ProductGroup { left, right };
    let op = super::closure(&p, &pairs, cap).ok()?.len();
    Some((ol, or, op))
}
