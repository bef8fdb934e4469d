//! Structure of a non-degenerate monomial retraction: the split of the
//! variables into `N1` (images `X_i * psi_i`) and `N2` (images `1`), the
//! associated monic retraction of a retraction with coefficients, and the
//! explicit isomorphism of the retract with a polynomial ring.

use serde::Serialize;

use crate::domain::{Domain, DomainElement};
use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;
use crate::monomial::{Image, Monomial, MonomialMap};
use crate::transform::is_standard;

/// `N1`/`N2` split of a non-degenerate monic retraction. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractStructure {
    pub p: usize,
    pub n1: Vec<usize>,
    pub n2: Vec<usize>,
    /// `f_i` for each `i` in `n1`, in the same order.
    pub generators: Vec<Monomial>,
    /// `psi_i = f_i / X_i`, a monomial in the `N2` variables only.
    pub psi: Vec<Monomial>,
}

fn check_nondegenerate_retraction(map: &MonomialMap) -> Result<()> {
    if !map.is_endomorphism() {
        return Err(Error::NotEndomorphism {
            source_vars: map.n(),
            target_vars: map.target_vars(),
        });
    }
    if !map.is_retraction() {
        return Err(Error::NotRetraction);
    }
    if let Some(i) = map.first_missing_variable() {
        return Err(Error::Degenerate(i + 1));
    }
    if let Some(i) = map.images().iter().position(Image::is_zero) {
        return Err(Error::ZeroImage(i + 1));
    }
    Ok(())
}

/// Splits a monic, non-degenerate retraction into `N1` and `N2`.
pub fn decompose(map: &MonomialMap) -> Result<RetractStructure> {
    if !map.is_monic() {
        return Err(Error::NotMonic);
    }
    check_nondegenerate_retraction(map)?;
    let images: Vec<&Monomial> = map.images().iter().filter_map(Image::as_monomial).collect();
    let (n1, n2): (Vec<usize>, Vec<usize>) = (0..map.n()).partition(|&i| !images[i].is_constant());
    let mut generators = Vec::with_capacity(n1.len());
    let mut psi = Vec::with_capacity(n1.len());
    for &i in &n1 {
        let f = images[i];
        let mut exponents = f.exponents().to_vec();
        debug_assert_eq!(exponents[i], 1);
        exponents[i] -= 1;
        debug_assert!(n1.iter().all(|&k| exponents[k] == 0));
        generators.push(f.clone());
        psi.push(Monomial::monic(map.domain(), exponents));
    }
    Ok(RetractStructure {
        p: n1.len(),
        n1,
        n2,
        generators,
        psi,
    })
}

/// Comparison of a retraction with coefficients against its monic part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicAssociation {
    pub monic_map: MonomialMap,
    /// Coefficient of each image.
    pub lambdas: Vec<DomainElement>,
    /// `lambda_i = lambda_i * f_i(lambda)` for every `i`.
    pub lambda_consistent: bool,
    /// The monic part is itself a retraction.
    pub monic_retraction: bool,
    pub all_lambdas_units: bool,
    /// `(i, lambda_i * psi_i(lambda))` for `i` in `N1` whenever that
    /// idempotent differs from 1.
    pub idempotent_witnesses: Vec<(usize, DomainElement)>,
    /// For each `j` in `N2`, an `i` in `N1` with `X_j | f_i`, and whether
    /// `lambda_i` lies in the ideal `(lambda_i * lambda_j)`.
    pub divisibility_links: Vec<DivisibilityLink>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityLink {
    pub n2_index: usize,
    pub n1_index: usize,
    pub holds: bool,
}

/// Strips the coefficients of a non-degenerate retraction and checks the
/// coefficient identities.
pub fn associated_monic(map: &MonomialMap) -> Result<MonicAssociation> {
    if let Some(i) = map.images().iter().position(Image::is_zero) {
        return Err(Error::ZeroImage(i + 1));
    }
    check_nondegenerate_retraction(map)?;
    let images: Vec<&Monomial> = map.images().iter().filter_map(Image::as_monomial).collect();
    let lambdas: Vec<DomainElement> = images.iter().map(|m| m.coeff().clone()).collect();
    let monic_map = map.monic_part();
    let monic_retraction = monic_map.is_retraction();

    let mut lambda_consistent = true;
    for (lambda, f) in lambdas.iter().zip(&images) {
        let value = f.monic_part().evaluate(&lambdas)?;
        lambda_consistent &= lambda.mul(&value)? == *lambda;
    }

    let mut all_lambdas_units = true;
    for lambda in &lambdas {
        all_lambdas_units &= lambda.is_unit()?;
    }

    let structure = decompose(&monic_map)?;
    let mut idempotent_witnesses = Vec::new();
    for (&i, psi) in structure.n1.iter().zip(&structure.psi) {
        let mu = psi.evaluate(&lambdas)?;
        let e = lambdas[i].mul(&mu)?;
        if !e.is_zero() && !e.is_one() && e.is_idempotent() {
            idempotent_witnesses.push((i, e));
        }
    }

    let mut divisibility_links = Vec::new();
    for &j in &structure.n2 {
        let Some(pos) = structure.psi.iter().position(|psi| psi.exponents()[j] > 0) else {
            continue;
        };
        let i = structure.n1[pos];
        let holds = lambdas[i].mul(&lambdas[j])?.divides(&lambdas[i]);
        divisibility_links.push(DivisibilityLink {
            n2_index: j,
            n1_index: i,
            holds,
        });
    }

    Ok(MonicAssociation {
        monic_map,
        lambdas,
        lambda_consistent,
        monic_retraction,
        all_lambdas_units,
        idempotent_witnesses,
        divisibility_links,
    })
}

/// All coefficient vectors `lambda` (nonzero entries) with
/// `lambda_i = lambda_i * f_i(lambda)` for the monic map, over a residue
/// ring `Z/m` with `m <= 30`.
pub fn enumerate_decorations(monic: &MonomialMap) -> Result<Vec<Vec<DomainElement>>> {
    let domain = monic.domain();
    let elements = match domain {
        Domain::IntegersMod(m) if m <= 30 => domain.elements().unwrap_or_default(),
        _ => {
            return Err(Error::NotInDomain {
                value: "decoration enumeration".into(),
                domain,
            })
        }
    };
    if !monic.is_monic() {
        return Err(Error::NotMonic);
    }
    let images: Vec<&Monomial> = monic
        .images()
        .iter()
        .enumerate()
        .map(|(i, image)| image.as_monomial().ok_or(Error::ZeroImage(i + 1)))
        .collect::<Result<_>>()?;
    let nonzero: Vec<DomainElement> = elements.into_iter().filter(|e| !e.is_zero()).collect();
    let mut found = Vec::new();
    for choice in itertools::Itertools::multi_cartesian_product(
        (0..monic.n()).map(|_| nonzero.iter().cloned()),
    ) {
        let mut ok = true;
        for (lambda, f) in choice.iter().zip(&images) {
            if lambda.mul(&f.evaluate(&choice)?)? != *lambda {
                ok = false;
                break;
            }
        }
        if ok {
            found.push(choice);
        }
    }
    Ok(found)
}

/// Applies coefficients to the images of a monic map.
pub fn decorate(monic: &MonomialMap, lambdas: &[DomainElement]) -> Result<MonomialMap> {
    if lambdas.len() != monic.n() {
        return Err(Error::DimensionMismatch {
            expected: monic.n(),
            found: lambdas.len(),
        });
    }
    let images = monic
        .images()
        .iter()
        .zip(lambdas)
        .map(|(image, lambda)| match image {
            Image::Zero => Ok(Image::Zero),
            Image::Monomial(m) => Ok(Image::Monomial(Monomial::new(
                m.coeff().mul(lambda)?,
                m.exponents().to_vec(),
            )?)),
        })
        .collect::<Result<_>>()?;
    MonomialMap::new(monic.domain(), images)
}

/// Certificate that the retract of a standard, non-degenerate monic
/// retraction of rank `p` is a polynomial ring in `p` variables.
///
/// `alpha: R[Y_1..Y_p] -> R[X_1..X_n]` sends `Y_i` to the generator `f_i`;
/// `beta: R[X_1..X_n] -> R[X_1..X_p]` keeps `X_1..X_p` and sends the other
/// variables to 1. When `beta ∘ alpha` is the identity, `alpha` is
/// injective and its image `R[f_1..f_p]` is the retract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub p: usize,
    pub alpha: MonomialMap,
    pub beta: MonomialMap,
    pub composite: MonomialMap,
    pub verified: bool,
}

pub fn polynomial_ring_witness(m: &ExponentMatrix, domain: Domain) -> Result<WitnessReport> {
    if !m.is_idempotent()? {
        return Err(Error::NotIdempotent);
    }
    if !is_standard(m) {
        return Err(Error::NotStandard);
    }
    if let Some(i) = m.first_zero_row() {
        return Err(Error::Degenerate(i + 1));
    }
    let n = m.n();
    let p = m.trace() as usize;
    let alpha = MonomialMap::between(
        domain,
        n,
        (0..p)
            .map(|i| Monomial::monic(domain, m.column(i)).into())
            .collect(),
    )?;
    let beta = MonomialMap::between(
        domain,
        p,
        (0..n)
            .map(|i| {
                if i < p {
                    Monomial::variable(domain, p, i).into()
                } else {
                    Monomial::one(domain, p).into()
                }
            })
            .collect(),
    )?;
    let composite = beta.compose(&alpha)?;
    let verified = composite == MonomialMap::identity(domain, p);
    Ok(WitnessReport {
        p,
        alpha,
        beta,
        composite,
        verified,
    })
}
