//! Monomials `c * X1^a1 ... Xn^an` and the algebra maps that send every
//! variable to zero or a monomial.

use std::fmt;

use crate::domain::{Domain, DomainElement};
use crate::error::{Error, Result};

/// A monomial with nonzero coefficient over a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    coeff: DomainElement,
    exponents: Vec<u64>,
}

impl Monomial {
    pub fn new(coeff: DomainElement, exponents: Vec<u64>) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        Ok(Monomial { coeff, exponents })
    }

    pub fn monic(domain: Domain, exponents: Vec<u64>) -> Self {
        Monomial {
            coeff: domain.one(),
            exponents,
        }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(domain: Domain, n: usize) -> Self {
        Self::monic(domain, vec![0; n])
    }

    /// The variable `X_{index+1}` in `n` variables.
    pub fn variable(domain: Domain, n: usize, index: usize) -> Self {
        let mut exponents = vec![0; n];
        exponents[index] = 1;
        Self::monic(domain, exponents)
    }

    pub fn coeff(&self) -> &DomainElement {
        &self.coeff
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn domain(&self) -> Domain {
        self.coeff.domain()
    }

    pub fn is_monic(&self) -> bool {
        self.coeff.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Same exponents, coefficient replaced by 1.
    pub fn monic_part(&self) -> Monomial {
        Self::monic(self.domain(), self.exponents.clone())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Image> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        let coeff = self.coeff.mul(&other.coeff)?;
        if coeff.is_zero() {
            return Ok(Image::Zero);
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Image::Monomial(Monomial { coeff, exponents }))
    }

    pub fn pow(&self, exponent: u64) -> Result<Image> {
        let coeff = self.coeff.pow(exponent)?;
        if coeff.is_zero() {
            return Ok(Image::Zero);
        }
        let exponents = self
            .exponents
            .iter()
            .map(|a| a.checked_mul(exponent).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Image::Monomial(Monomial { coeff, exponents }))
    }

    /// Value of the monomial at `point`.
    pub fn evaluate(&self, point: &[DomainElement]) -> Result<DomainElement> {
        if point.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: point.len(),
            });
        }
        let mut acc = self.coeff.clone();
        for (value, &e) in point.iter().zip(&self.exponents) {
            if e > 0 {
                acc = acc.mul(&value.pow(e)?)?;
            }
        }
        Ok(acc)
    }
}

impl Monomial {
    /// Text form with variables named `<var>1, <var>2, ..`: `1`, `X1 X3^2`,
    /// `3`, `-1 * X2`.
    pub fn format_with(&self, var: &str) -> String {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| match e {
                1 => format!("{var}{}", i + 1),
                _ => format!("{var}{}^{e}", i + 1),
            })
            .collect();
        match (self.coeff.is_one(), factors.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => factors.join(" "),
            (false, true) => self.coeff.to_string(),
            (false, false) => format!("{} * {}", self.coeff, factors.join(" ")),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("X"))
    }
}

/// The image of a variable: zero or a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Image {
    Zero,
    Monomial(Monomial),
}

impl Image {
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self {
            Image::Zero => None,
            Image::Monomial(m) => Some(m),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Image::Zero)
    }
}

impl Image {
    pub fn format_with(&self, var: &str) -> String {
        match self {
            Image::Zero => "0".to_string(),
            Image::Monomial(m) => m.format_with(var),
        }
    }
}

impl fmt::Display for Image {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("X"))
    }
}

impl From<Monomial> for Image {
    fn from(m: Monomial) -> Self {
        Image::Monomial(m)
    }
}

/// An `R`-algebra map `R[X_1..X_k] -> R[X_1..X_n]` that sends every variable
/// to zero or a monomial. Most maps here are endomorphisms (`k = n`); the
/// polynomial-ring witness also needs maps between rings of different size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    domain: Domain,
    target_vars: usize,
    images: Vec<Image>,
}

impl MonomialMap {
    /// An endomorphism of `R[X_1..X_n]` with `n = images.len()`.
    pub fn new(domain: Domain, images: Vec<Image>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let n = images.len();
        Self::between(domain, n, images)
    }

    /// A map from `images.len()` source variables into `target_vars` variables.
    pub fn between(domain: Domain, target_vars: usize, images: Vec<Image>) -> Result<Self> {
        for image in &images {
            if let Image::Monomial(m) = image {
                if m.n() != target_vars {
                    return Err(Error::DimensionMismatch {
                        expected: target_vars,
                        found: m.n(),
                    });
                }
                if m.domain() != domain {
                    return Err(Error::DomainMismatch {
                        left: domain,
                        right: m.domain(),
                    });
                }
                if m.coeff.is_zero() {
                    return Err(Error::ZeroCoefficient);
                }
            }
        }
        Ok(MonomialMap {
            domain,
            target_vars,
            images,
        })
    }

    pub fn identity(domain: Domain, n: usize) -> Self {
        let images = (0..n)
            .map(|i| Image::Monomial(Monomial::variable(domain, n, i)))
            .collect();
        MonomialMap {
            domain,
            target_vars: n,
            images,
        }
    }

    /// Number of source variables.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn target_vars(&self) -> usize {
        self.target_vars
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn images(&self) -> &[Image] {
        &self.images
    }

    pub fn image(&self, index: usize) -> &Image {
        &self.images[index]
    }

    pub fn is_endomorphism(&self) -> bool {
        self.n() == self.target_vars
    }

    /// Applies the map to a monomial in the source variables.
    pub fn substitute(&self, m: &Monomial) -> Result<Image> {
        if m.n() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: m.n(),
            });
        }
        if m.domain() != self.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: m.domain(),
            });
        }
        let mut acc = Monomial {
            coeff: m.coeff.clone(),
            exponents: vec![0; self.target_vars],
        };
        for (image, &e) in self.images.iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            let Image::Monomial(f) = image else {
                return Ok(Image::Zero);
            };
            let Image::Monomial(power) = f.pow(e)? else {
                return Ok(Image::Zero);
            };
            match acc.mul(&power)? {
                Image::Monomial(next) => acc = next,
                Image::Zero => return Ok(Image::Zero),
            }
        }
        Ok(Image::Monomial(acc))
    }

    /// `self ∘ inner`: sends `X_i` to `self(inner(X_i))`.
    pub fn compose(&self, inner: &MonomialMap) -> Result<MonomialMap> {
        if inner.target_vars != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: inner.target_vars,
            });
        }
        if inner.domain != self.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: inner.domain,
            });
        }
        let images = inner
            .images
            .iter()
            .map(|image| match image {
                Image::Zero => Ok(Image::Zero),
                Image::Monomial(m) => self.substitute(m),
            })
            .collect::<Result<_>>()?;
        Ok(MonomialMap {
            domain: self.domain,
            target_vars: self.target_vars,
            images,
        })
    }

    /// `φ ∘ φ = φ`. A square that overflows cannot equal `φ`, so overflow
    /// reads as `false`.
    pub fn is_retraction(&self) -> bool {
        self.is_endomorphism() && self.compose(self).is_ok_and(|sq| sq == *self)
    }

    /// Every target variable occurs in some image.
    pub fn is_nondegenerate(&self) -> bool {
        self.first_missing_variable().is_none()
    }

    /// First target variable (0-based) that occurs in no image.
    pub fn first_missing_variable(&self) -> Option<usize> {
        (0..self.target_vars).find(|&i| {
            !self
                .images
                .iter()
                .filter_map(Image::as_monomial)
                .any(|m| m.exponents[i] > 0)
        })
    }

    pub fn is_monic(&self) -> bool {
        self.images
            .iter()
            .filter_map(Image::as_monomial)
            .all(Monomial::is_monic)
    }

    /// The map with every coefficient replaced by 1.
    pub fn monic_part(&self) -> MonomialMap {
        let images = self
            .images
            .iter()
            .map(|image| match image {
                Image::Zero => Image::Zero,
                Image::Monomial(m) => Image::Monomial(m.monic_part()),
            })
            .collect();
        MonomialMap {
            domain: self.domain,
            target_vars: self.target_vars,
            images,
        }
    }
}
