//! PBW arithmetic in `U(g)` and the coinvariant spaces `U/U g0`, `U/g0 U`.
//!
//! Monomials are words of basis indices in non-decreasing rank; odd letters
//! never repeat. Two rank orders are supported: odd letters before even ones
//! (the natural order for the left quotient `U/U g0`, whose subset basis is
//! then a monomial filter) and even before odd (for the right quotient
//! `U/g0 U`).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::format;
use crate::linalg::{
    is_zero_vector, primitive_integral, rat, zero_vector, RatMatrix, RatVector, Rational,
};
use crate::reps::SuperModule;
use crate::superalgebra::{LieSuperalgebra, Parity};

/// Which factor class sorts first in a PBW monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PbwOrder {
    OddFirst,
    EvenFirst,
}

/// Which one-sided quotient of `U(g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `U/(U g0)`, a left module: the induced module `Ind_{g0}^{g} k`.
    Left,
    /// `U/(g0 U)`, a right module, turned into a left one through
    /// `z . w = -(-1)^{|z||w|} w z`.
    Right,
}

impl Side {
    pub fn order(self) -> PbwOrder {
        match self {
            Side::Left => PbwOrder::OddFirst,
            Side::Right => PbwOrder::EvenFirst,
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left (U/U.g0)",
            Side::Right => "right (U/g0.U)",
        })
    }
}

/// Rewriting strategy: which out-of-order adjacent pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A PBW-ordered word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of every basis index; odd exponents are at most one.
    pub fn exponents(&self, dim: usize) -> Vec<u32> {
        let mut e = vec![0; dim];
        for &l in &self.0 {
            e[l] += 1;
        }
        e
    }

    pub fn parity(&self, g: &LieSuperalgebra) -> Parity {
        self.0.iter().fold(Parity::Even, |p, &l| p.add(g.parity(l)))
    }

    pub fn render(&self, g: &LieSuperalgebra) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut k = 1;
            while i + k < self.0.len() && self.0[i + k] == l {
                k += 1;
            }
            parts.push(if k == 1 { g.label(l).to_string() } else { format!("{}^{k}", g.label(l)) });
            i += k;
        }
        parts.join("*")
    }
}

/// Finite rational combination of PBW monomials in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopingElement {
    order: PbwOrder,
    terms: BTreeMap<Monomial, Rational>,
}

impl EnvelopingElement {
    pub fn zero(order: PbwOrder) -> Self {
        EnvelopingElement { order, terms: BTreeMap::new() }
    }

    pub fn one(order: PbwOrder) -> Self {
        Self::scalar(order, Rational::one())
    }

    pub fn scalar(order: PbwOrder, c: Rational) -> Self {
        let mut e = Self::zero(order);
        e.add_term(Monomial::one(), c);
        e
    }

    pub fn order(&self) -> PbwOrder {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &EnvelopingElement) -> EnvelopingElement {
        assert_eq!(self.order, other.order, "adding elements in different PBW orders");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> EnvelopingElement {
        let mut out = Self::zero(self.order);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect();
        out
    }

    pub fn sub(&self, other: &EnvelopingElement) -> EnvelopingElement {
        self.add(&other.scale(&rat(-1)))
    }

    /// The counit: coefficient of the empty monomial.
    pub fn counit(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn render(&self, g: &LieSuperalgebra) -> String {
        let rendered: Vec<(Rational, String)> =
            self.terms.iter().map(|(m, c)| (c.clone(), m.render(g))).collect();
        format::linear_combination(rendered.iter().map(|(c, s)| (c, s.as_str())))
    }
}

/// The rewriting engine for one algebra and one PBW order.
#[derive(Clone, Debug)]
pub struct Pbw<'g> {
    g: &'g LieSuperalgebra,
    order: PbwOrder,
    rank: Vec<usize>,
}

impl<'g> Pbw<'g> {
    pub fn new(g: &'g LieSuperalgebra, order: PbwOrder) -> Self {
        let (first, second) = match order {
            PbwOrder::OddFirst => (g.odd_indices(), g.even_indices()),
            PbwOrder::EvenFirst => (g.even_indices(), g.odd_indices()),
        };
        let mut rank = vec![0; g.dim()];
        for (r, i) in first.into_iter().chain(second).enumerate() {
            rank[i] = r;
        }
        Pbw { g, order, rank }
    }

    pub fn algebra(&self) -> &'g LieSuperalgebra {
        self.g
    }

    pub fn order(&self) -> PbwOrder {
        self.order
    }

    pub fn one(&self) -> EnvelopingElement {
        EnvelopingElement::one(self.order)
    }

    pub fn generator(&self, i: usize) -> EnvelopingElement {
        let mut e = EnvelopingElement::zero(self.order);
        e.add_term(Monomial(vec![i]), Rational::one());
        e
    }

    /// The image of `x in g` inside `U(g)`.
    pub fn from_algebra_element(&self, x: &[Rational]) -> EnvelopingElement {
        let mut e = EnvelopingElement::zero(self.order);
        for (i, c) in x.iter().enumerate() {
            e.add_term(Monomial(vec![i]), c.clone());
        }
        e
    }

    /// Position `p` of an adjacent pair `(w[p], w[p+1])` that is out of order.
    fn violation(&self, w: &[usize], strategy: Strategy) -> Option<usize> {
        let bad = |p: usize| {
            let (x, y) = (w[p], w[p + 1]);
            self.rank[x] > self.rank[y] || (x == y && self.g.parity(x).is_odd())
        };
        let n = w.len().saturating_sub(1);
        match strategy {
            Strategy::Leftmost => (0..n).find(|&p| bad(p)),
            Strategy::Rightmost => (0..n).rev().find(|&p| bad(p)),
        }
    }

    /// Rewrites a combination of words to PBW normal form. With `quotient`
    /// set, words lying in the corresponding one-sided ideal are discarded as
    /// soon as they are recognised; this is only valid when the engine's
    /// order matches the side.
    fn reduce(
        &self,
        words: impl IntoIterator<Item = (Vec<usize>, Rational)>,
        strategy: Strategy,
        quotient: Option<Side>,
    ) -> BTreeMap<Monomial, Rational> {
        if let Some(side) = quotient {
            debug_assert_eq!(side.order(), self.order);
        }
        let in_ideal = |w: &[usize]| match quotient {
            Some(Side::Left) => w.last().is_some_and(|&l| self.g.parity(l).is_even()),
            Some(Side::Right) => w.first().is_some_and(|&l| self.g.parity(l).is_even()),
            None => false,
        };
        let mut work: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
        let push = |work: &mut BTreeMap<Vec<usize>, Rational>, w: Vec<usize>, c: Rational| {
            if c.is_zero() || in_ideal(&w) {
                return;
            }
            let slot = work.entry(w).or_insert_with(Rational::zero);
            *slot += c;
        };
        for (w, c) in words {
            push(&mut work, w, c);
        }
        let mut done: BTreeMap<Monomial, Rational> = BTreeMap::new();
        let half = Rational::new(1.into(), 2.into());
        while let Some((w, c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            let Some(p) = self.violation(&w, strategy) else {
                let slot = done.entry(Monomial(w)).or_insert_with(Rational::zero);
                *slot += c;
                continue;
            };
            let (x, y) = (w[p], w[p + 1]);
            let splice = |k: usize| {
                let mut v = Vec::with_capacity(w.len() - 1);
                v.extend_from_slice(&w[..p]);
                v.push(k);
                v.extend_from_slice(&w[p + 2..]);
                v
            };
            if x == y {
                // Odd square: x x = [x, x] / 2.
                for (k, b) in self.g.bracket_basis(x, x) {
                    push(&mut work, splice(*k), &c * b * &half);
                }
            } else {
                // x y = (-1)^{|x||y|} y x + [x, y].
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                let s = rat(self.g.parity(x).koszul(self.g.parity(y)));
                push(&mut work, swapped, &c * s);
                for (k, b) in self.g.bracket_basis(x, y) {
                    push(&mut work, splice(*k), &c * b);
                }
            }
        }
        done.retain(|_, c| !c.is_zero());
        done
    }

    /// Normal form of a word of basis indices.
    pub fn normal_form(&self, word: &[usize]) -> EnvelopingElement {
        self.normal_form_with(word, Strategy::Leftmost)
    }

    pub fn normal_form_with(&self, word: &[usize], strategy: Strategy) -> EnvelopingElement {
        EnvelopingElement {
            order: self.order,
            terms: self.reduce([(word.to_vec(), Rational::one())], strategy, None),
        }
    }

    /// Normal form of an arbitrary combination of words.
    pub fn normalize_words(
        &self,
        words: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> EnvelopingElement {
        EnvelopingElement { order: self.order, terms: self.reduce(words, Strategy::Leftmost, None) }
    }

    pub fn multiply(&self, x: &EnvelopingElement, y: &EnvelopingElement) -> EnvelopingElement {
        assert_eq!(x.order, self.order);
        assert_eq!(y.order, self.order);
        let words = x.terms.iter().flat_map(|(mx, cx)| {
            y.terms.iter().map(move |(my, cy)| {
                let mut w = mx.0.clone();
                w.extend_from_slice(&my.0);
                (w, cx * cy)
            })
        });
        self.normalize_words(words.collect::<Vec<_>>())
    }

    pub fn product(&self, factors: &[EnvelopingElement]) -> EnvelopingElement {
        factors.iter().fold(self.one(), |acc, f| self.multiply(&acc, f))
    }

    /// The antipode: `S(x) = -x` on `g`, `S(xy) = (-1)^{|x||y|} S(y) S(x)`.
    /// With this convention `S` is an involution.
    pub fn antipode(&self, x: &EnvelopingElement) -> EnvelopingElement {
        let words: Vec<(Vec<usize>, Rational)> = x
            .terms
            .iter()
            .map(|(m, c)| {
                let (w, s) = antipode_word(self.g, &m.0);
                (w, c * rat(s))
            })
            .collect();
        self.normalize_words(words)
    }

    /// Rewrites an element given in any order into this engine's order.
    pub fn reorder(&self, x: &EnvelopingElement) -> EnvelopingElement {
        if x.order == self.order {
            return x.clone();
        }
        self.normalize_words(x.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())).collect::<Vec<_>>())
    }
}

/// Reversed word and sign of `S(e_{i1} ... e_{ik})`.
fn antipode_word(g: &LieSuperalgebra, w: &[usize]) -> (Vec<usize>, i64) {
    let odd = w.iter().filter(|&&l| g.parity(l).is_odd()).count();
    let reversal_sign = if (odd * odd.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
    let negations = if w.len() % 2 == 1 { -1 } else { 1 };
    (w.iter().rev().copied().collect(), reversal_sign * negations)
}

/// Vector in a coinvariant space, indexed by subsets of the odd basis
/// (bit `p` of the index stands for the `p`-th odd basis element).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantElement {
    pub side: Side,
    pub coords: RatVector,
}

impl CoinvariantElement {
    /// The counit, which factors through both quotients.
    pub fn epsilon(&self) -> Rational {
        self.coords.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }
}

/// One of the two coinvariant spaces of `U(g)`, with its `g`-action.
#[derive(Clone, Debug)]
pub struct CoinvariantSpace<'g> {
    engine: Pbw<'g>,
    side: Side,
    odd: Vec<usize>,
}

impl<'g> CoinvariantSpace<'g> {
    pub fn new(g: &'g LieSuperalgebra, side: Side) -> Self {
        CoinvariantSpace { engine: Pbw::new(g, side.order()), side, odd: g.odd_indices() }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn engine(&self) -> &Pbw<'g> {
        &self.engine
    }

    pub fn algebra(&self) -> &'g LieSuperalgebra {
        self.engine.g
    }

    /// `2^{dim g1}`
    pub fn dim(&self) -> usize {
        1usize << self.odd.len()
    }

    /// The odd monomial `x_S`, letters ascending.
    pub fn subset_word(&self, mask: usize) -> Vec<usize> {
        self.odd
            .iter()
            .enumerate()
            .filter(|(p, _)| mask >> p & 1 == 1)
            .map(|(_, &i)| i)
            .collect()
    }

    pub fn subset_parity(&self, mask: usize) -> Parity {
        Parity::from_bit(mask.count_ones() % 2 == 1)
    }

    pub fn subset_label(&self, mask: usize) -> String {
        let w = self.subset_word(mask);
        if w.is_empty() {
            "1".to_string()
        } else {
            Monomial(w).render(self.algebra())
        }
    }

    fn mask_of(&self, m: &Monomial) -> Option<usize> {
        let mut mask = 0;
        for &l in &m.0 {
            let p = self.odd.iter().position(|&o| o == l)?;
            mask |= 1 << p;
        }
        Some(mask)
    }

    fn project_words(&self, words: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> RatVector {
        let reduced = self.engine.reduce(words, Strategy::Leftmost, Some(self.side));
        let mut coords = zero_vector(self.dim());
        for (m, c) in reduced {
            let mask = self
                .mask_of(&m)
                .expect("normal forms surviving the quotient contain only odd letters");
            coords[mask] += c;
        }
        coords
    }

    /// Image of `x` in the quotient.
    pub fn project(&self, x: &EnvelopingElement) -> CoinvariantElement {
        let words: Vec<(Vec<usize>, Rational)> =
            x.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        CoinvariantElement { side: self.side, coords: self.project_words(words) }
    }

    pub fn element(&self, coords: RatVector) -> Result<CoinvariantElement> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: coords.len() });
        }
        Ok(CoinvariantElement { side: self.side, coords })
    }

    /// The canonical lift `sum w_S x_S` in `U(g)`.
    pub fn lift(&self, w: &CoinvariantElement) -> EnvelopingElement {
        let words: Vec<(Vec<usize>, Rational)> = w
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mask, c)| (self.subset_word(mask), c.clone()))
            .collect();
        self.engine.normalize_words(words)
    }

    /// Matrix of the basis element `e_i` acting on the subset basis.
    pub fn action_matrix(&self, i: usize) -> RatMatrix {
        let g = self.algebra();
        let n = self.dim();
        let mut m = RatMatrix::zeros(n, n);
        for mask in 0..n {
            let col = match self.side {
                Side::Left => {
                    let mut w = vec![i];
                    w.extend(self.subset_word(mask));
                    self.project_words([(w, Rational::one())])
                }
                Side::Right => {
                    let mut w = self.subset_word(mask);
                    w.push(i);
                    let s = -g.parity(i).koszul(self.subset_parity(mask));
                    self.project_words([(w, rat(s))])
                }
            };
            for (r, c) in col.into_iter().enumerate() {
                m[(r, mask)] = c;
            }
        }
        m
    }

    pub fn action_matrices(&self) -> Vec<RatMatrix> {
        (0..self.algebra().dim()).map(|i| self.action_matrix(i)).collect()
    }

    /// `z . w` for an algebra element `z`.
    pub fn module_action(&self, z: &[Rational], w: &CoinvariantElement) -> Result<CoinvariantElement> {
        let g = self.algebra();
        if z.len() != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), got: z.len() });
        }
        if w.side != self.side || w.coords.len() != self.dim() {
            return Err(Error::Invalid("coinvariant element from a different space".into()));
        }
        let mut out = zero_vector(self.dim());
        for (i, c) in z.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = self.action_matrix(i).mul_vec(&w.coords);
            crate::linalg::add_scaled(&mut out, c, &image);
        }
        Ok(CoinvariantElement { side: self.side, coords: out })
    }

    /// The space as a super module; `x_S` has parity `|S| mod 2`.
    pub fn as_module(&self) -> SuperModule {
        let parity = (0..self.dim()).map(|m| self.subset_parity(m)).collect();
        SuperModule::new(parity, self.action_matrices())
    }

    /// Basis of the `g`-invariants: the common kernel of all action matrices.
    pub fn invariants(&self) -> Vec<RatVector> {
        invariants_of(&self.action_matrices(), self.dim())
    }

    /// Whether `w` is killed by every basis element.
    pub fn is_invariant(&self, w: &CoinvariantElement) -> bool {
        (0..self.algebra().dim()).all(|i| is_zero_vector(&self.action_matrix(i).mul_vec(&w.coords)))
    }

    /// Transports `w` to the other side through the antipode.
    pub fn antipode_transfer(&self, w: &CoinvariantElement) -> CoinvariantElement {
        let other = CoinvariantSpace::new(self.algebra(), self.side.other());
        let lifted = self.lift(w);
        let image = other.engine.reorder(&other.engine.antipode(&self.engine.reorder(&lifted)));
        other.project(&image)
    }
}

fn invariants_of(mats: &[RatMatrix], n: usize) -> Vec<RatVector> {
    let nonzero: Vec<&RatMatrix> = mats.iter().filter(|m| !m.is_zero()).collect();
    if nonzero.is_empty() {
        return (0..n).map(|i| crate::linalg::unit_vector(n, i)).collect();
    }
    RatMatrix::vstack(&nonzero).kernel_basis()
}

/// The invariant `v` of the left coinvariant space together with `eps(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostElement {
    pub v: CoinvariantElement,
    pub epsilon: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GhostVerdict {
    Semisimple,
    NotSemisimple,
    NoInvariant,
}

impl fmt::Display for GhostVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GhostVerdict::Semisimple => "Semisimple",
            GhostVerdict::NotSemisimple => "NotSemisimple",
            GhostVerdict::NoInvariant => "NoInvariant",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostReport {
    pub invariant_dim: usize,
    /// Invariant dimension on the right side, for the antipode cross-check.
    pub right_invariant_dim: usize,
    pub ghost: Option<GhostElement>,
    pub verdict: GhostVerdict,
}

/// Normalizes an invariant to a primitive integral vector whose first nonzero
/// coordinate is positive. The empty subset comes first, so `eps(v) > 0`
/// whenever it is nonzero and no rescaling can hide it.
pub fn normalize_ghost(coords: &[Rational]) -> RatVector {
    primitive_integral(coords)
}

/// The semisimplicity criterion: `Rep` is semisimple iff `eps(v) != 0` for
/// the invariant `v` of the induced module.
pub fn ghost_criterion(g: &LieSuperalgebra) -> GhostReport {
    let left = CoinvariantSpace::new(g, Side::Left);
    let right = CoinvariantSpace::new(g, Side::Right);
    let inv = left.invariants();
    let right_invariant_dim = right.invariants().len();
    if inv.is_empty() {
        return GhostReport { invariant_dim: 0, right_invariant_dim, ghost: None, verdict: GhostVerdict::NoInvariant };
    }
    // With a larger invariant space prefer a vector with nonzero counit.
    let chosen = inv.iter().find(|v| !v[0].is_zero()).unwrap_or(&inv[0]);
    let coords = normalize_ghost(chosen);
    let epsilon = coords[0].clone();
    let verdict = if epsilon.is_zero() { GhostVerdict::NotSemisimple } else { GhostVerdict::Semisimple };
    GhostReport {
        invariant_dim: inv.len(),
        right_invariant_dim,
        ghost: Some(GhostElement { v: CoinvariantElement { side: Side::Left, coords }, epsilon }),
        verdict,
    }
}

/// Result of checking `(1+t1)(3+t2)...((2n-1)+tn)`, `t_i = a_i b_i`, in
/// `U(osp(1|2n))`. The product itself is invariant in `U/(U g0)`; its
/// antipode image is the invariant of `U/(g0 U)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjokovicReport {
    pub n: usize,
    /// The product in odd-first PBW normal form.
    pub element: EnvelopingElement,
    pub left_image: CoinvariantElement,
    pub left_invariant: bool,
    /// Antipode image, projected to the right side.
    pub right_image: CoinvariantElement,
    pub right_invariant: bool,
    pub epsilon: Rational,
    pub expected_epsilon: Rational,
}

impl DjokovicReport {
    pub fn passed(&self) -> bool {
        self.left_invariant
            && self.right_invariant
            && !self.left_image.is_zero()
            && self.epsilon == self.expected_epsilon
            && self.left_image.epsilon() == self.epsilon
            && self.right_image.epsilon() == self.epsilon
    }
}

/// `(2n-1)!!`
pub fn double_factorial_odd(n: usize) -> Rational {
    (1..=n).map(|i| rat(2 * i as i64 - 1)).product()
}

/// The product `prod_i ((2i-1) + a_i b_i)` in the given engine.
pub fn djokovic_element(engine: &Pbw<'_>, n: usize) -> EnvelopingElement {
    let g = engine.algebra();
    let factors: Vec<EnvelopingElement> = (1..=n)
        .map(|i| {
            let a = g.index_of(&format!("a{i}")).expect("osp basis has a_i");
            let b = g.index_of(&format!("b{i}")).expect("osp basis has b_i");
            engine
                .normal_form(&[a, b])
                .add(&EnvelopingElement::scalar(engine.order(), rat(2 * i as i64 - 1)))
        })
        .collect();
    engine.product(&factors)
}

pub fn verify_djokovic(n: usize) -> Result<DjokovicReport> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let g = crate::families::build_osp1(n);
    let left = CoinvariantSpace::new(&g, Side::Left);
    let element = djokovic_element(left.engine(), n);
    let left_image = left.project(&element);
    let left_invariant = left.is_invariant(&left_image);
    let right_image = left.antipode_transfer(&left_image);
    let right = CoinvariantSpace::new(&g, Side::Right);
    let right_invariant = right.is_invariant(&right_image);
    Ok(DjokovicReport {
        n,
        epsilon: element.counit(),
        expected_epsilon: double_factorial_odd(n),
        element,
        left_image,
        left_invariant,
        right_image,
        right_invariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn idx(g: &LieSuperalgebra, l: &str) -> usize {
        g.index_of(l).unwrap()
    }

    #[test]
    fn empty_word_is_one() {
        let g = families::build_gl(1, 1);
        let e = Pbw::new(&g, PbwOrder::OddFirst);
        assert_eq!(e.normal_form(&[]), e.one());
    }

    #[test]
    fn gl11_single_super_swap() {
        let g = families::build_gl(1, 1);
        let e = Pbw::new(&g, PbwOrder::OddFirst);
        let (e12, e21, e11, e22) = (idx(&g, "E12"), idx(&g, "E21"), idx(&g, "E11"), idx(&g, "E22"));
        let nf = e.normal_form(&[e21, e12]);
        let expected = e
            .normal_form(&[e12, e21])
            .scale(&rat(-1))
            .add(&e.generator(e11))
            .add(&e.generator(e22));
        assert_eq!(nf, expected);
    }

    #[test]
    fn odd_square_reduces_to_bracket() {
        let g = families::build_osp1(1);
        let e = Pbw::new(&g, PbwOrder::OddFirst);
        let a = idx(&g, "a1");
        let sq = g.odd_square(&g.basis_vector(a)).unwrap();
        assert_eq!(e.normal_form(&[a, a]), e.from_algebra_element(&sq));
        assert!(!e.normal_form(&[a, a]).is_zero());
    }

    #[test]
    fn counit_and_antipode_basics() {
        let g = families::build_osp1(2);
        let e = Pbw::new(&g, PbwOrder::OddFirst);
        assert_eq!(e.one().counit(), rat(1));
        for i in 0..g.dim() {
            assert!(e.generator(i).counit().is_zero());
            assert_eq!(e.antipode(&e.generator(i)), e.generator(i).scale(&rat(-1)));
        }
        assert_eq!(e.antipode(&e.one()), e.one());
    }

    #[test]
    fn coinvariant_dimensions() {
        for g in [families::build_gl(1, 1), families::build_osp1(2), families::build_sl(2, 1)] {
            for side in [Side::Left, Side::Right] {
                let s = CoinvariantSpace::new(&g, side);
                assert_eq!(s.dim(), 1 << g.odd_dim());
                assert!(s.as_module().validate(&g).is_valid(), "{} {side}", g.name());
            }
        }
    }

    #[test]
    fn even_elements_project_to_zero_on_the_left() {
        let g = families::build_gl(1, 1);
        let s = CoinvariantSpace::new(&g, Side::Left);
        let e11 = idx(&g, "E11");
        let one = s.project(&s.engine().one());
        assert_eq!(one.coords[0], rat(1));
        assert!(s.project(&s.engine().generator(e11)).is_zero());
        let acted = s.module_action(&g.basis_vector(e11), &one).unwrap();
        assert!(acted.is_zero());
    }

    #[test]
    fn djokovic_small() {
        let r = verify_djokovic(1).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.epsilon, rat(1));
    }
}
