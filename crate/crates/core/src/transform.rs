//! Permutations of the variables acting on maps and exponent matrices.
//!
//! Indices are 0-based in the Rust API. Text forms (`Display`,
//! [`Permutation::from_one_based`]) use the 1-based `sigma(1) sigma(2) ...`
//! convention.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;
use crate::monomial::{Image, Monomial, MonomialMap};

/// A bijection of `{0, .., n-1}`; `mapping[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &image in &mapping {
            if image >= n {
                return Err(Error::InvalidPermutation(format!(
                    "index {} out of range 1..={n}",
                    image + 1
                )));
            }
            if std::mem::replace(&mut seen[image], true) {
                return Err(Error::InvalidPermutation(format!(
                    "index {} repeated",
                    image + 1
                )));
            }
        }
        Ok(Permutation { mapping })
    }

    /// `images[i-1] = sigma(i)` with values in `1..=n`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mapping = images
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation("index 0 in 1-based form".into()))
            })
            .collect::<Result<_>>()?;
        Self::new(mapping)
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            mapping: (0..n).collect(),
        }
    }

    /// The transposition of `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.mapping.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.mapping.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut mapping = vec![0; self.len()];
        for (i, &j) in self.mapping.iter().enumerate() {
            mapping[j] = i;
        }
        Permutation { mapping }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Permutation) -> Self {
        Permutation {
            mapping: first.mapping.iter().map(|&i| self.mapping[i]).collect(),
        }
    }

    /// Every permutation of `n` points, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (0..n)
            .permutations(n)
            .map(|mapping| Permutation { mapping })
    }

    /// Renames the variables of a monomial, `X_i -> X_{sigma(i)}`.
    pub fn rename(&self, m: &Monomial) -> Result<Monomial> {
        self.check_size(m.n())?;
        let mut exponents = vec![0; m.n()];
        for (i, &e) in m.exponents().iter().enumerate() {
            exponents[self.mapping[i]] = e;
        }
        Monomial::new(m.coeff().clone(), exponents)
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if n != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_one_based().iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

/// The conjugate map `φ^σ`, defined by `φ^σ(X_{σ(i)}) = σ(φ(X_i))`.
pub fn conjugate_map(map: &MonomialMap, sigma: &Permutation) -> Result<MonomialMap> {
    if !map.is_endomorphism() {
        return Err(Error::NotEndomorphism {
            source_vars: map.n(),
            target_vars: map.target_vars(),
        });
    }
    sigma.check_size(map.n())?;
    let mut images = vec![Image::Zero; map.n()];
    for (i, image) in map.images().iter().enumerate() {
        images[sigma.apply(i)] = match image {
            Image::Zero => Image::Zero,
            Image::Monomial(m) => Image::Monomial(sigma.rename(m)?),
        };
    }
    MonomialMap::new(map.domain(), images)
}

/// Simultaneous row and column permutation: entry `(σ(i), σ(j))` of the
/// result is entry `(i, j)` of `m`. This is the exponent matrix of `φ^σ`.
pub fn conjugate(m: &ExponentMatrix, sigma: &Permutation) -> Result<ExponentMatrix> {
    sigma.check_size(m.n())?;
    let mut out = ExponentMatrix::zero(m.n());
    for i in 0..m.n() {
        for j in 0..m.n() {
            out.set(sigma.apply(i), sigma.apply(j), m.get(i, j));
        }
    }
    Ok(out)
}

/// `M^τ`: column `τ(j)` of the result is column `j` of `m`.
pub fn permute_columns(m: &ExponentMatrix, tau: &Permutation) -> Result<ExponentMatrix> {
    tau.check_size(m.n())?;
    let mut out = ExponentMatrix::zero(m.n());
    for i in 0..m.n() {
        for j in 0..m.n() {
            out.set(i, tau.apply(j), m.get(i, j));
        }
    }
    Ok(out)
}

/// Non-increasing diagonal.
pub fn is_standard(m: &ExponentMatrix) -> bool {
    m.diagonal().windows(2).all(|w| w[0] >= w[1])
}

/// Conjugates an idempotent matrix into standard form.
///
/// With `p` the trace, indices carrying a unit diagonal go to `0..p` and the
/// rest to `p..n`. Indices already inside their target block stay fixed; the
/// displaced ones are paired, in increasing order, with the free slots of
/// their block in increasing order. A standard input therefore yields the
/// identity.
pub fn standardize(m: &ExponentMatrix) -> Result<(ExponentMatrix, Permutation)> {
    if !m.is_idempotent()? {
        return Err(Error::NotIdempotent);
    }
    let n = m.n();
    let diagonal = m.diagonal();
    let p = diagonal.iter().filter(|&&d| d == 1).count();
    let mut mapping = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    let in_place = |i: usize| (diagonal[i] == 1) == (i < p);
    for i in (0..n).filter(|&i| in_place(i)) {
        mapping[i] = i;
        taken[i] = true;
    }
    let mut free_head: Vec<usize> = (0..p).filter(|&s| !taken[s]).collect();
    let mut free_tail: Vec<usize> = (p..n).filter(|&s| !taken[s]).collect();
    free_head.reverse();
    free_tail.reverse();
    for i in (0..n).filter(|&i| !in_place(i)) {
        let slot = if diagonal[i] == 1 {
            free_head.pop()
        } else {
            free_tail.pop()
        };
        mapping[i] = slot.expect("block sizes match the diagonal counts");
    }
    let sigma = Permutation::new(mapping)?;
    let standard = conjugate(m, &sigma)?;
    Ok((standard, sigma))
}

/// Block form `[I_p 0; P 0]` with `p` the trace and every row of `P`
/// nonzero: the shape of a standard, non-degenerate idempotent matrix.
pub fn has_block_form(m: &ExponentMatrix) -> bool {
    let n = m.n();
    let p = m.trace() as usize;
    if p > n {
        return false;
    }
    let identity_block = (0..p).all(|i| (0..p).all(|j| m.get(i, j) == u64::from(i == j)));
    let zero_tail = (p..n).all(|j| m.is_zero_column(j));
    let full_rows = (p..n).all(|i| (0..p).any(|j| m.get(i, j) != 0));
    identity_block && zero_tail && full_rows
}
