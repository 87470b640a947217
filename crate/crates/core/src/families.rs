//! Built-in Lie superalgebras, each with its defining representation.
//!
//! The orthosymplectic algebra `osp(1|2n)` lives in `gl(1|2n)` with module
//! basis `e0 | a_1..a_n, b_1..b_n` and symplectic form `(a_i, b_j) = delta_ij`.
//! Its even part `sp(2n)` has the basis
//!
//! * `A{i}{j} = E_ij - E_{n+j,n+i}`,
//! * `B{i}{j} = E_{i,n+j} + E_{j,n+i}` for `i < j`, `B{i}{i} = E_{i,n+i}`,
//! * `C{i}{j} = E_{n+i,j} + E_{n+j,i}` for `i < j`, `C{i}{i} = E_{n+i,i}`,
//!
//! (indices on the odd block), and an odd vector `v` acts by `e0 -> v`,
//! `w -> -(v, w) e0`, so that `[u, v](w) = (w, u) v + (w, v) u`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, RatMatrix, RatVector, Rational};
use crate::reps::SuperModule;
use crate::superalgebra::{LieSuperalgebra, Parity};

/// Builds the Lie superalgebra spanned by homogeneous matrices, with the
/// supercommutator as bracket and the matrices as faithful representation.
pub fn from_matrix_basis(
    name: &str,
    labels: Vec<String>,
    parities: Vec<Parity>,
    module_parity: Vec<Parity>,
    matrices: Vec<RatMatrix>,
) -> Result<LieSuperalgebra> {
    let d = matrices.len();
    let n = module_parity.len();
    if labels.len() != d || parities.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: labels.len().min(parities.len()) });
    }
    let flat: Vec<RatVector> = matrices.iter().map(|m| m.entries().to_vec()).collect();
    let basis = RatMatrix::from_columns(n * n, &flat);
    let left_inverse = basis
        .left_inverse()
        .ok_or_else(|| Error::Invalid(format!("{name}: matrix basis is linearly dependent")))?;
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let xy = &matrices[i] * &matrices[j];
            let yx = &matrices[j] * &matrices[i];
            let s = rat(parities[i].koszul(parities[j]));
            let comm = &xy - &yx.scale(&s);
            let coords = left_inverse.mul_vec(comm.entries());
            if basis.mul_vec(&coords) != comm.entries() {
                return Err(Error::Invalid(format!(
                    "{name}: bracket of {} and {} leaves the span",
                    labels[i], labels[j]
                )));
            }
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    let rep = SuperModule::new(module_parity, matrices);
    Ok(LieSuperalgebra::new(name, labels, parities, entries)?.with_faithful_rep(rep))
}

fn unit_matrix(n: usize, r: usize, c: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    m[(r, c)] = Rational::one();
    m
}

fn gl_label(a: usize, b: usize, size: usize) -> String {
    if size > 9 {
        format!("E{a}_{b}")
    } else {
        format!("E{a}{b}")
    }
}

fn block_parities(m: usize, n: usize) -> Vec<Parity> {
    (0..m + n).map(|a| Parity::from_bit(a >= m)).collect()
}

/// `gl(m|n)` on the matrix units `E_ab`, row-major, 1-indexed labels.
pub fn build_gl(m: usize, n: usize) -> LieSuperalgebra {
    assert!(m + n >= 1, "gl(m|n) needs m + n >= 1");
    let size = m + n;
    let module_parity = block_parities(m, n);
    let mut labels = Vec::new();
    let mut parities = Vec::new();
    let mut mats = Vec::new();
    let mut cartan = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if a == b {
                cartan.push(labels.len());
            }
            labels.push(gl_label(a + 1, b + 1, size));
            parities.push(module_parity[a].add(module_parity[b]));
            mats.push(unit_matrix(size, a, b));
        }
    }
    from_matrix_basis(&format!("gl({m}|{n})"), labels, parities, module_parity, mats)
        .expect("gl is closed under the supercommutator")
        .with_cartan(cartan)
}

/// `sl(m|n)`: Cartan elements `H1..H{m+n-1}` first, then the off-diagonal units.
pub fn build_sl(m: usize, n: usize) -> LieSuperalgebra {
    assert!(m >= 1 && n >= 1, "sl(m|n) needs m, n >= 1");
    let size = m + n;
    let module_parity = block_parities(m, n);
    let mut labels = Vec::new();
    let mut parities = Vec::new();
    let mut mats = Vec::new();
    for i in 0..size - 1 {
        let mut h = unit_matrix(size, i, i);
        // E_ii has supertrace +1 on the even block and -1 on the odd block.
        let next = if i + 1 == m { rat(1) } else { rat(-1) };
        h[(i + 1, i + 1)] = next;
        labels.push(format!("H{}", i + 1));
        parities.push(Parity::Even);
        mats.push(h);
    }
    let cartan: Vec<usize> = (0..size - 1).collect();
    for a in 0..size {
        for b in 0..size {
            if a != b {
                labels.push(gl_label(a + 1, b + 1, size));
                parities.push(module_parity[a].add(module_parity[b]));
                mats.push(unit_matrix(size, a, b));
            }
        }
    }
    from_matrix_basis(&format!("sl({m}|{n})"), labels, parities, module_parity, mats)
        .expect("sl is closed under the supercommutator")
        .with_cartan(cartan)
}

/// `osp(1|2n)` with the conventions in the module documentation.
pub fn build_osp1(n: usize) -> LieSuperalgebra {
    osp1_with_form_sign(n, -1)
}

/// `osp(1|2n)` where an odd `v` sends `w` to `sign * (v, w) e0`. Both signs
/// give isomorphic algebras; they differ in which quadratic elements of the
/// enveloping algebra are invariant.
pub(crate) fn osp1_with_form_sign(n: usize, sign: i64) -> LieSuperalgebra {
    assert!(n >= 1, "osp(1|2n) needs n >= 1");
    let size = 2 * n + 1;
    // Odd-block index k (0-based, 0..2n) sits at module index k + 1.
    let at = |r: usize, c: usize| unit_matrix(size, r + 1, c + 1);
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut cartan = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                cartan.push(labels.len());
            }
            labels.push(format!("A{}{}", i + 1, j + 1));
            mats.push(&at(i, j) - &at(n + j, n + i));
        }
    }
    for i in 0..n {
        for j in i..n {
            labels.push(format!("B{}{}", i + 1, j + 1));
            mats.push(if i == j { at(i, n + i) } else { &at(i, n + j) + &at(j, n + i) });
        }
    }
    for i in 0..n {
        for j in i..n {
            labels.push(format!("C{}{}", i + 1, j + 1));
            mats.push(if i == j { at(n + i, i) } else { &at(n + i, j) + &at(n + j, i) });
        }
    }
    let even_dim = labels.len();
    let form = |p: usize, q: usize| -> i64 {
        // (a_i, b_j) = delta_ij, (b_j, a_i) = -delta_ij.
        if p < n && q == p + n {
            1
        } else if p >= n && q + n == p {
            -1
        } else {
            0
        }
    };
    for k in 0..2 * n {
        let (letter, idx) = if k < n { ('a', k + 1) } else { ('b', k - n + 1) };
        labels.push(format!("{letter}{idx}"));
        let mut m = RatMatrix::zeros(size, size);
        m[(k + 1, 0)] = Rational::one();
        for q in 0..2 * n {
            let f = form(k, q);
            if f != 0 {
                m[(0, q + 1)] = rat(sign * f);
            }
        }
        mats.push(m);
    }
    let mut parities = vec![Parity::Even; even_dim];
    parities.extend(vec![Parity::Odd; 2 * n]);
    let mut module_parity = vec![Parity::Even];
    module_parity.extend(vec![Parity::Odd; 2 * n]);
    from_matrix_basis(&format!("osp(1|{})", 2 * n), labels, parities, module_parity, mats)
        .expect("osp(1|2n) is closed under the supercommutator")
        .with_cartan(cartan)
}

/// One odd `u` with `[u, u] = 0`, acting on `k^{1|1}` by `e0 -> e1`.
pub fn build_toy_odd_nilpotent() -> LieSuperalgebra {
    let mut u = RatMatrix::zeros(2, 2);
    u[(1, 0)] = Rational::one();
    from_matrix_basis(
        "toy_odd_nilpotent",
        vec!["u".into()],
        vec![Parity::Odd],
        vec![Parity::Even, Parity::Odd],
        vec![u],
    )
    .expect("toy algebra is closed")
    .with_cartan(Vec::new())
}

/// `span{h, u}` with `[u, u] = 2h`, on `k^{2|2}` with basis `e0, e1, f0, f1`:
/// `u: e0 -> e1 -> 0, f0 <-> f1` and `h = diag(0, 0, 1, 1)`.
pub fn build_toy_odd_semisimple() -> LieSuperalgebra {
    let parity = vec![Parity::Even, Parity::Odd, Parity::Even, Parity::Odd];
    let mut u = RatMatrix::zeros(4, 4);
    u[(1, 0)] = Rational::one();
    u[(3, 2)] = Rational::one();
    u[(2, 3)] = Rational::one();
    let h = RatMatrix::diagonal(&[rat(0), rat(0), rat(1), rat(1)]);
    from_matrix_basis(
        "toy_odd_semisimple",
        vec!["h".into(), "u".into()],
        vec![Parity::Even, Parity::Odd],
        parity,
        vec![h, u],
    )
    .expect("toy algebra is closed")
    .with_cartan(vec![0])
}

/// The abelian even algebra of dimension `r`, acting diagonally on `k^r`.
pub fn build_torus(r: usize) -> LieSuperalgebra {
    let labels = (1..=r).map(|i| format!("t{i}")).collect();
    let mats = (0..r).map(|i| unit_matrix(r, i, i)).collect();
    from_matrix_basis(&format!("torus({r})"), labels, vec![Parity::Even; r], vec![Parity::Even; r], mats)
        .expect("torus is abelian")
        .with_cartan((0..r).collect())
}

/// Direct product. Labels become `f{k}.{label}` (1-based factor index); the
/// faithful representation is the block sum of the factors' representations.
pub fn build_product(factors: &[LieSuperalgebra]) -> LieSuperalgebra {
    if factors.is_empty() {
        return LieSuperalgebra::zero().with_cartan(Vec::new());
    }
    let total: usize = factors.iter().map(|f| f.dim()).sum();
    let mut labels = Vec::with_capacity(total);
    let mut parities = Vec::with_capacity(total);
    let mut entries = Vec::new();
    let mut cartan = Some(Vec::new());
    let mut offset = 0;
    for (k, f) in factors.iter().enumerate() {
        labels.extend(f.labels().iter().map(|l| format!("f{}.{l}", k + 1)));
        parities.extend_from_slice(f.parities());
        entries.extend(
            f.structure_entries()
                .into_iter()
                .map(|(i, j, l, c)| (i + offset, j + offset, l + offset, c)),
        );
        cartan = match (cartan, f.cartan()) {
            (Some(mut acc), Some(c)) => {
                acc.extend(c.iter().map(|i| i + offset));
                Some(acc)
            }
            _ => None,
        };
        offset += f.dim();
    }
    let name = format!("product({})", factors.iter().map(|f| f.name()).collect::<Vec<_>>().join(", "));
    let mut g = LieSuperalgebra::new(name, labels, parities, entries).expect("indices are in range");
    if factors.iter().all(|f| f.faithful_rep().is_some()) {
        let rep_dims: Vec<usize> = factors.iter().map(|f| f.faithful_rep().unwrap().dim()).collect();
        let n: usize = rep_dims.iter().sum();
        let mut module_parity = Vec::with_capacity(n);
        let mut action = Vec::with_capacity(total);
        let mut row = 0;
        for (f, &rd) in factors.iter().zip(&rep_dims) {
            let rep = f.faithful_rep().unwrap();
            module_parity.extend_from_slice(rep.parities());
            for m in rep.actions() {
                let mut big = RatMatrix::zeros(n, n);
                for r in 0..rd {
                    for c in 0..rd {
                        big[(row + r, row + c)] = m[(r, c)].clone();
                    }
                }
                action.push(big);
            }
            row += rd;
        }
        g = g.with_faithful_rep(SuperModule::new(module_parity, action));
    }
    if let Some(c) = cartan {
        g = g.with_cartan(c);
    }
    g
}

/// A built-in family with its parameters, as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Gl { m: usize, n: usize },
    Sl { m: usize, n: usize },
    /// `osp(1|2n)`.
    Osp1 { n: usize },
    Torus { r: usize },
    ToyOddNilpotent,
    ToyOddSemisimple,
    Product(Vec<FamilySpec>),
}

impl FamilySpec {
    pub fn build(&self) -> LieSuperalgebra {
        match self {
            FamilySpec::Gl { m, n } => build_gl(*m, *n),
            FamilySpec::Sl { m, n } => build_sl(*m, *n),
            FamilySpec::Osp1 { n } => build_osp1(*n),
            FamilySpec::Torus { r } => build_torus(*r),
            FamilySpec::ToyOddNilpotent => build_toy_odd_nilpotent(),
            FamilySpec::ToyOddSemisimple => build_toy_odd_semisimple(),
            FamilySpec::Product(fs) => {
                build_product(&fs.iter().map(FamilySpec::build).collect::<Vec<_>>())
            }
        }
    }

    fn parse_simple(s: &str) -> Result<FamilySpec> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(|| Error::Parse(format!("family '{s}' is missing a parameter")))?
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("family '{s}': parameter {i} is not a nonnegative integer")))
        };
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k + 1 {
                Ok(())
            } else {
                Err(Error::Parse(format!("family '{s}' expects {k} parameter(s)")))
            }
        };
        let spec = match parts[0] {
            "gl" => {
                arity(2)?;
                let (m, n) = (num(1)?, num(2)?);
                if m + n == 0 {
                    return Err(Error::Parse("gl:m:n needs m + n >= 1".into()));
                }
                FamilySpec::Gl { m, n }
            }
            "sl" => {
                arity(2)?;
                let (m, n) = (num(1)?, num(2)?);
                if m == 0 || n == 0 {
                    return Err(Error::Parse("sl:m:n needs m, n >= 1".into()));
                }
                FamilySpec::Sl { m, n }
            }
            "osp1" => {
                arity(1)?;
                let n = num(1)?;
                if n == 0 {
                    return Err(Error::Parse("osp1:n needs n >= 1".into()));
                }
                FamilySpec::Osp1 { n }
            }
            "torus" => {
                arity(1)?;
                FamilySpec::Torus { r: num(1)? }
            }
            "toy_odd_nilpotent" => {
                arity(0)?;
                FamilySpec::ToyOddNilpotent
            }
            "toy_odd_semisimple" => {
                arity(0)?;
                FamilySpec::ToyOddSemisimple
            }
            other => return Err(Error::Parse(format!("unknown family '{other}'"))),
        };
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("product:") {
            let factors = rest
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(FamilySpec::parse_simple)
                .collect::<Result<Vec<_>>>()?;
            return Ok(FamilySpec::Product(factors));
        }
        if s == "product" {
            return Ok(FamilySpec::Product(Vec::new()));
        }
        FamilySpec::parse_simple(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Gl { m, n } => write!(f, "gl:{m}:{n}"),
            FamilySpec::Sl { m, n } => write!(f, "sl:{m}:{n}"),
            FamilySpec::Osp1 { n } => write!(f, "osp1:{n}"),
            FamilySpec::Torus { r } => write!(f, "torus:{r}"),
            FamilySpec::ToyOddNilpotent => f.write_str("toy_odd_nilpotent"),
            FamilySpec::ToyOddSemisimple => f.write_str("toy_odd_semisimple"),
            FamilySpec::Product(fs) => {
                let inner: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
                write!(f, "product:{}", inner.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!((build_gl(1, 1).dim(), build_gl(1, 1).odd_dim()), (4, 2));
        assert_eq!((build_gl(2, 1).dim(), build_gl(2, 1).odd_dim()), (9, 4));
        assert_eq!((build_sl(2, 1).dim(), build_sl(2, 1).odd_dim()), (8, 4));
        for n in 1..=3 {
            let g = build_osp1(n);
            assert_eq!(g.dim(), n * (2 * n + 1) + 2 * n);
            assert_eq!(g.odd_dim(), 2 * n);
        }
        assert_eq!(build_product(&[]).dim(), 0);
    }

    #[test]
    fn families_validate() {
        for g in [
            build_gl(1, 1),
            build_gl(2, 1),
            build_sl(2, 1),
            build_osp1(1),
            build_osp1(2),
            build_toy_odd_nilpotent(),
            build_toy_odd_semisimple(),
            build_torus(2),
            build_product(&[build_osp1(1), build_torus(1)]),
        ] {
            assert!(g.validate().is_valid(), "{}", g.name());
            assert!(g.faithful_rep().unwrap().validate(&g).is_valid(), "{}", g.name());
        }
    }

    #[test]
    fn sl_supertrace_zero() {
        let g = build_sl(2, 1);
        let rep = g.faithful_rep().unwrap();
        for i in 0..g.dim() {
            assert!(rep.supertrace(&g.basis_vector(i)).is_zero());
        }
    }

    #[test]
    fn osp_odd_bracket_formula() {
        // [u, v](w) = (w, u) v + (w, v) u with (a_i, b_j) = delta_ij.
        let n = 2;
        let g = build_osp1(n);
        let rep = g.faithful_rep().unwrap();
        let form = |p: usize, q: usize| -> i64 {
            if p < n && q == p + n {
                1
            } else if p >= n && q + n == p {
                -1
            } else {
                0
            }
        };
        let odd = g.odd_indices();
        for (p, &u) in odd.iter().enumerate() {
            for (q, &v) in odd.iter().enumerate() {
                let br = g.bracket(&g.basis_vector(u), &g.basis_vector(v)).unwrap();
                let m = rep.act(&br);
                for w in 0..2 * n {
                    let image: Vec<Rational> = (0..2 * n).map(|r| m[(r + 1, w + 1)].clone()).collect();
                    let mut expected = vec![rat(0); 2 * n];
                    expected[q] += rat(form(w, p));
                    expected[p] += rat(form(w, q));
                    assert_eq!(image, expected, "u={p} v={q} w={w}");
                }
            }
        }
    }

    #[test]
    fn spec_round_trip() {
        for s in ["gl:1:1", "sl:2:1", "osp1:2", "torus:3", "toy_odd_nilpotent", "product:osp1:1,osp1:2"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("osp1:0".parse::<FamilySpec>().is_err());
        assert!("gl:1".parse::<FamilySpec>().is_err());
        assert!("so:3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn product_dimensions() {
        let g = build_product(&[build_osp1(1), build_osp1(2)]);
        assert_eq!(g.dim(), 19);
        assert_eq!(g.faithful_rep().unwrap().dim(), 3 + 5);
        assert_eq!(g.cartan().unwrap().len(), 3);
    }
}
