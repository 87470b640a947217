//! Structural predicates: reductive even part, quasireductivity, ideals and
//! the decomposition into center and simple ideals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{in_span, is_zero_vector, span_basis, span_dimension, RatMatrix, RatVector, Rational};
use crate::reps::{is_semisimple_action, SuperModule};
use crate::roots;
use crate::superalgebra::{LieSuperalgebra, Parity};

/// Basis of `span{[e_i, e_j] : |e_i| = |e_j| = 0}`.
pub fn derived_even(g: &LieSuperalgebra) -> Vec<RatVector> {
    let even = g.even_indices();
    let mut brackets = Vec::new();
    for (a, &i) in even.iter().enumerate() {
        for &j in &even[a + 1..] {
            let v = g.bracket_with_basis(i, &g.basis_vector(j));
            if !is_zero_vector(&v) {
                brackets.push(v);
            }
        }
    }
    span_basis(&brackets)
}

/// Basis of `[g, g]`.
pub fn derived_algebra(g: &LieSuperalgebra) -> Vec<RatVector> {
    let d = g.dim();
    let mut brackets = Vec::new();
    for i in 0..d {
        for j in i..d {
            let v = g.bracket_with_basis(i, &g.basis_vector(j));
            if !is_zero_vector(&v) {
                brackets.push(v);
            }
        }
    }
    span_basis(&brackets)
}

/// Basis of the center of the even part `g0` (as a Lie algebra on its own).
pub fn even_center(g: &LieSuperalgebra) -> Vec<RatVector> {
    let even = g.even_indices();
    let d = g.dim();
    if even.is_empty() {
        return Vec::new();
    }
    // Unknowns are the even coordinates; rows are ([x, e_j])_k for even j.
    let mut m = RatMatrix::zeros(even.len() * d, even.len());
    for (col, &i) in even.iter().enumerate() {
        for (jj, &j) in even.iter().enumerate() {
            for (k, c) in g.bracket_basis(i, j) {
                m[(jj * d + k, col)] = c.clone();
            }
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|w| {
            let mut v = vec![Rational::zero(); d];
            for (col, &i) in even.iter().enumerate() {
                v[i] = w[col].clone();
            }
            v
        })
        .collect()
}

/// The solvable radical of `g0`: the orthogonal complement of `[g0, g0]`
/// under the trace form of the faithful representation.
pub fn even_radical(g: &LieSuperalgebra) -> Result<Vec<RatVector>> {
    let rep = g
        .faithful_rep()
        .ok_or_else(|| Error::MissingFaithfulRep(g.name().to_string()))?;
    let even = g.even_indices();
    let d = g.dim();
    let derived = derived_even(g);
    if derived.is_empty() {
        return Ok(even.iter().map(|&i| g.basis_vector(i)).collect());
    }
    let derived_mats: Vec<RatMatrix> = derived.iter().map(|v| rep.act(v)).collect();
    let mut m = RatMatrix::zeros(derived.len(), even.len());
    for (col, &i) in even.iter().enumerate() {
        let x = rep.action(i);
        for (row, y) in derived_mats.iter().enumerate() {
            m[(row, col)] = x.trace_product(y);
        }
    }
    Ok(m.kernel_basis()
        .into_iter()
        .map(|w| {
            let mut v = vec![Rational::zero(); d];
            for (col, &i) in even.iter().enumerate() {
                v[i] = w[col].clone();
            }
            v
        })
        .collect())
}

/// Whether the solvable radical of `g0` equals its center.
pub fn is_reductive_even_part(g: &LieSuperalgebra) -> Result<bool> {
    let radical = even_radical(g)?;
    let center = even_center(g);
    Ok(span_dimension(&radical) == span_dimension(&center) && radical.iter().all(|v| in_span(&center, v)))
}

/// `ad(e_i)` restricted to `g1`, for every even `e_i`.
pub fn even_action_on_odd(g: &LieSuperalgebra) -> Vec<RatMatrix> {
    let odd = g.odd_indices();
    g.even_indices()
        .into_iter()
        .map(|i| {
            let ad = g.ad_matrix(&g.basis_vector(i));
            ad.submatrix(&odd, &odd)
        })
        .collect()
}

/// `g0` reductive and `g1` a semisimple `g0`-module.
pub fn is_quasireductive(g: &LieSuperalgebra) -> Result<bool> {
    if !is_reductive_even_part(g)? {
        return Ok(false);
    }
    let odd_dim = g.odd_dim();
    Ok(odd_dim == 0 || is_semisimple_action(odd_dim, &even_action_on_odd(g)))
}

/// Smallest ideal containing the given vectors.
pub fn ideal_generated(g: &LieSuperalgebra, seeds: &[RatVector]) -> Vec<RatVector> {
    let mut basis = span_basis(seeds);
    let mut frontier = basis.clone();
    while let Some(v) = frontier.pop() {
        for i in 0..g.dim() {
            let w = g.bracket_with_basis(i, &v);
            if !is_zero_vector(&w) && !in_span(&basis, &w) {
                basis.push(w.clone());
                frontier.push(w);
            }
        }
    }
    basis
}

/// Splits a graded subspace basis into a homogeneous basis.
pub fn homogeneous_basis(g: &LieSuperalgebra, vectors: &[RatVector]) -> Vec<RatVector> {
    let even: Vec<RatVector> = vectors.iter().map(|v| g.even_component(v)).collect();
    let odd: Vec<RatVector> = vectors.iter().map(|v| g.odd_component(v)).collect();
    let mut out = span_basis(&even);
    out.extend(span_basis(&odd));
    out
}

/// `g = center + sum of ideals`, all sums direct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub center: Vec<RatVector>,
    /// Homogeneous bases of the minimal non-central ideals.
    pub ideals: Vec<Vec<RatVector>>,
}

/// Decomposes `g` into its center and minimal ideals, certifying that the sum
/// is direct. Root vectors of a generic Cartan element lie in single simple
/// factors, so the ideals they generate are the candidates.
pub fn direct_sum_decompose(g: &LieSuperalgebra, seed: u64) -> Result<Decomposition> {
    let d = g.dim();
    let center = g.center();
    let derived = derived_algebra(g);
    let fail = |why: String| Err(Error::NotSemisimpleStructure(format!("{}: {why}", g.name())));
    let mut joint = center.clone();
    joint.extend(derived.iter().cloned());
    if span_dimension(&joint) != d || center.len() + derived.len() != d {
        return fail(format!(
            "center (dim {}) and [g, g] (dim {}) do not form a direct sum equal to g",
            center.len(),
            derived.len()
        ));
    }
    if derived.is_empty() {
        return Ok(Decomposition { center, ideals: Vec::new() });
    }
    let cartan = roots::find_cartan(g, seed)?;
    let datum = roots::root_decomposition(g, &cartan)?;
    let root_vectors: Vec<RatVector> = datum
        .roots
        .iter()
        .filter(|r| !r.is_zero_weight())
        .flat_map(|r| r.basis.iter().cloned())
        .collect();
    if root_vectors.is_empty() {
        return fail("[g, g] has no nonzero roots".into());
    }
    let contains = |big: &Vec<RatVector>, small: &Vec<RatVector>| small.iter().all(|w| in_span(big, w));
    let mut candidates: Vec<Vec<RatVector>> = Vec::new();
    for v in &root_vectors {
        let ideal = ideal_generated(g, std::slice::from_ref(v));
        if !candidates.iter().any(|c| c.len() == ideal.len() && contains(c, &ideal)) {
            candidates.push(ideal);
        }
    }
    let ideals: Vec<Vec<RatVector>> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|o| o.len() < c.len() && contains(c, o)))
        .cloned()
        .collect();
    let total: usize = ideals.iter().map(Vec::len).sum();
    let mut all: Vec<RatVector> = ideals.iter().flatten().cloned().collect();
    if total != derived.len() || span_dimension(&all) != derived.len() {
        return fail("the minimal ideals do not sum directly to [g, g]".into());
    }
    all.extend(center.iter().cloned());
    debug_assert_eq!(span_dimension(&all), d);
    let ideals = ideals.into_iter().map(|i| homogeneous_basis(g, &i)).collect();
    Ok(Decomposition { center, ideals })
}

/// The subalgebra spanned by a homogeneous basis, with the restricted
/// faithful representation. Unit vectors keep their labels.
pub fn subalgebra(g: &LieSuperalgebra, basis: &[RatVector], name: &str) -> Result<LieSuperalgebra> {
    let k = basis.len();
    let mut parities = Vec::with_capacity(k);
    for v in basis {
        parities.push(if g.is_even_element(v) {
            Parity::Even
        } else if g.is_odd_element(v) {
            Parity::Odd
        } else {
            return Err(Error::Invalid("subalgebra basis must be homogeneous".into()));
        });
    }
    let cols = RatMatrix::from_columns(g.dim(), basis);
    let left = cols
        .left_inverse()
        .ok_or_else(|| Error::Invalid("subalgebra basis is linearly dependent".into()))?;
    let unit_index = |v: &RatVector| -> Option<usize> {
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        (nz.len() == 1 && v[nz[0]] == Rational::from_integer(1.into())).then(|| nz[0])
    };
    let labels: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(p, v)| unit_index(v).map_or_else(|| format!("y{}", p + 1), |i| g.label(i).to_string()))
        .collect();
    let mut entries = Vec::new();
    for (p, x) in basis.iter().enumerate() {
        for (q, y) in basis.iter().enumerate() {
            let br = g.bracket(x, y)?;
            let coords = left.mul_vec(&br);
            if cols.mul_vec(&coords) != br {
                return Err(Error::Invalid(format!("span is not closed under [{}, {}]", labels[p], labels[q])));
            }
            for (r, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((p, q, r, c));
                }
            }
        }
    }
    let mut sub = LieSuperalgebra::new(name, labels, parities, entries)?;
    if let Some(rep) = g.faithful_rep() {
        let action = basis.iter().map(|v| rep.act(v)).collect();
        sub = sub.with_faithful_rep(SuperModule::new(rep.parities().to_vec(), action));
    }
    if let (Some(cartan), true) = (g.cartan(), basis.iter().all(|v| unit_index(v).is_some())) {
        let inside = cartan
            .iter()
            .filter_map(|&c| basis.iter().position(|v| unit_index(v) == Some(c)))
            .collect();
        sub = sub.with_cartan(inside);
    }
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::linalg::rat;

    fn nonabelian_solvable() -> LieSuperalgebra {
        // [x, y] = y, realized by x = E11, y = E12 in gl(2).
        let mut x = RatMatrix::zeros(2, 2);
        x[(0, 0)] = rat(1);
        let mut y = RatMatrix::zeros(2, 2);
        y[(0, 1)] = rat(1);
        families::from_matrix_basis(
            "solvable",
            vec!["x".into(), "y".into()],
            vec![Parity::Even; 2],
            vec![Parity::Even; 2],
            vec![x, y],
        )
        .unwrap()
    }

    #[test]
    fn reductive_even_parts() {
        assert!(is_reductive_even_part(&families::build_osp1(1)).unwrap());
        assert!(is_reductive_even_part(&families::build_gl(1, 1)).unwrap());
        assert!(!is_reductive_even_part(&nonabelian_solvable()).unwrap());
    }

    #[test]
    fn missing_rep_is_an_error() {
        let g = LieSuperalgebra::new("bare", vec!["x".into()], vec![Parity::Even], []).unwrap();
        assert!(matches!(is_reductive_even_part(&g), Err(Error::MissingFaithfulRep(_))));
    }

    #[test]
    fn quasireductive_families() {
        for n in 1..=2 {
            assert!(is_quasireductive(&families::build_osp1(n)).unwrap());
        }
        assert!(is_quasireductive(&families::build_gl(1, 1)).unwrap());
    }

    #[test]
    fn decompositions() {
        let gl = families::build_gl(1, 1);
        assert!(matches!(direct_sum_decompose(&gl, 1), Err(Error::NotSemisimpleStructure(_))));
        let p = families::build_product(&[families::build_osp1(1), families::build_osp1(2)]);
        let d = direct_sum_decompose(&p, 1).unwrap();
        assert!(d.center.is_empty());
        let mut dims: Vec<usize> = d.ideals.iter().map(Vec::len).collect();
        dims.sort();
        assert_eq!(dims, vec![5, 14]);
        let t = families::build_torus(2);
        let d = direct_sum_decompose(&t, 1).unwrap();
        assert_eq!((d.center.len(), d.ideals.len()), (2, 0));
    }

    #[test]
    fn subalgebra_of_product_factor() {
        let p = families::build_product(&[families::build_torus(1), families::build_osp1(1)]);
        let d = direct_sum_decompose(&p, 3).unwrap();
        assert_eq!(d.center.len(), 1);
        let s = subalgebra(&p, &d.ideals[0], "factor").unwrap();
        assert_eq!(s.dim(), 5);
        assert!(s.validate().is_valid());
        assert!(s.faithful_rep().unwrap().validate(&s).is_valid());
        assert_eq!(s.cartan().map(<[usize]>::len), Some(1));
    }
}
