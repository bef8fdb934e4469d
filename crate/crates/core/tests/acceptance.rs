//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact; the only tolerances are the runtime
//! targets pinned below.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use monoretract::crosscheck::all_matrices;
use monoretract::oracle::{self, Census};
use monoretract::same_retract::{count_same_retract, enumerate_same_retract, same_image};
use monoretract::structure::{
    associated_monic, decorate, enumerate_decorations, polynomial_ring_witness,
};
use monoretract::transform::{conjugate, has_block_form, is_standard, standardize};
use monoretract::{Domain, DomainElement, ExponentMatrix, Monomial, MonomialMap};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Runtime target for the exhaustive characterization sweep.
const CHARACTERIZATION_TARGET: Duration = Duration::from_secs(5);
/// Runtime target for the counting and monoid cross-check.
const COUNTING_TARGET: Duration = Duration::from_secs(60);
const MAX_N: usize = 3;
const MAX_BOUND: u64 = 2;
const RANDOM_WITNESS_CASES: usize = 100;
const RANDOM_WITNESS_SEED: u64 = 0x5eed_0f1d_ea11;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn m(rows: &[&[u64]]) -> ExponentMatrix {
    ExponentMatrix::from_rows(rows).unwrap()
}

/// Censuses for every `n <= MAX_N` at the largest bound; smaller bounds are
/// subsets of these.
fn censuses() -> Vec<Census> {
    (1..=MAX_N)
        .map(|n| oracle::enumerate_idempotent(n, MAX_BOUND).unwrap())
        .collect()
}

fn characterization() -> Outcome {
    let start = Instant::now();
    let mut checked = 0u64;
    for a in all_matrices(3, 2).filter(ExponentMatrix::is_nondegenerate) {
        let characterized = a.characterize_nonzero_rows().map_err(|e| e.to_string())?;
        let idempotent = a.is_idempotent().map_err(|e| e.to_string())?;
        ensure(characterized == idempotent, || format!("mismatch on\n{a}"))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(checked == 26u64.pow(3), || {
        format!("{checked} candidates, expected 17576")
    })?;
    ensure(elapsed < CHARACTERIZATION_TARGET, || {
        format!("took {elapsed:?}, target {CHARACTERIZATION_TARGET:?}")
    })?;
    Ok(format!(
        "{checked} matrices with nonzero rows, 0 mismatches"
    ))
}

fn structure_clauses(censuses: &[Census]) -> Outcome {
    let mut checked = 0;
    for census in censuses {
        for a in census.matrices() {
            ensure(a.structure_report().all_hold(), || {
                format!("clause fails on\n{a}")
            })?;
            let rank = oracle::rational_rank(a) as u64;
            ensure(rank == a.trace(), || {
                format!("rank {rank} != trace on\n{a}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} census matrices"))
}

fn correspondence() -> Outcome {
    let mut checked = 0;
    let mut retractions = 0;
    for n in 1..=MAX_N {
        let exponent_vectors: Vec<Vec<u64>> = (0..n)
            .map(|_| 0..=MAX_BOUND)
            .multi_cartesian_product()
            .collect();
        for images in (0..n)
            .map(|_| exponent_vectors.iter())
            .multi_cartesian_product()
        {
            let images = images
                .into_iter()
                .map(|e| Monomial::monic(Domain::Integers, e.clone()).into())
                .collect();
            let map = MonomialMap::new(Domain::Integers, images).unwrap();
            let a = ExponentMatrix::from_monic_map(&map).map_err(|e| e.to_string())?;
            let retraction = map.is_retraction();
            ensure(retraction == a.is_idempotent().unwrap(), || {
                format!("retraction {retraction} disagrees with idempotency of\n{a}")
            })?;
            ensure(a.to_monic_map(Domain::Integers) == map, || {
                format!("round trip fails on\n{a}")
            })?;
            retractions += usize::from(retraction);
            checked += 1;
        }
    }
    Ok(format!("{checked} monic maps, {retractions} retractions"))
}

fn counting(censuses: &[Census]) -> Outcome {
    let start = Instant::now();
    let mut matrices = 0;
    let mut pairs = 0u64;
    for census in censuses {
        let cap = oracle::default_degree_cap(census.bound, census.n);
        let nondegenerate: Vec<&ExponentMatrix> = census.nondegenerate().collect();
        for &a in &nondegenerate {
            let listed: BTreeSet<ExponentMatrix> =
                enumerate_same_retract(a).unwrap().into_iter().collect();
            let count = count_same_retract(a).unwrap();
            let from_census: BTreeSet<ExponentMatrix> = nondegenerate
                .iter()
                .filter(|&&b| same_image(a, b).unwrap())
                .map(|&b| b.clone())
                .collect();
            ensure(
                listed.len() as u64 == count && listed == from_census,
                || {
                    format!(
                        "enumerated {}, counted {count}, census {} for\n{a}",
                        listed.len(),
                        from_census.len()
                    )
                },
            )?;
            for &b in &nondegenerate {
                let by_monoid = oracle::monoid_same_image(a, b, cap).unwrap();
                ensure(by_monoid == same_image(a, b).unwrap(), || {
                    format!("monoid comparison disagrees on\n{a}\nand\n{b}")
                })?;
                pairs += 1;
            }
            matrices += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < COUNTING_TARGET, || {
        format!("took {elapsed:?}, target {COUNTING_TARGET:?}")
    })?;
    Ok(format!(
        "{matrices} non-degenerate matrices, {pairs} monoid pairs"
    ))
}

fn worked_examples() -> Outcome {
    for a in 1..=3 {
        for b in 1..=3 {
            let single = m(&[&[1, 0, 0], &[0, 1, 0], &[a, b, 0]]);
            let count = count_same_retract(&single).unwrap();
            ensure(count == 1, || format!("count {count} for m={a}, n={b}"))?;
        }
    }
    let first = m(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 0]]);
    let partner = m(&[&[0, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
    ensure(count_same_retract(&first).unwrap() == 2, || {
        "pair count is not 2".into()
    })?;
    let listed = enumerate_same_retract(&first).unwrap();
    ensure(listed.len() == 2 && listed.contains(&first), || {
        format!("{listed:?}")
    })?;
    let second = listed.iter().find(|x| **x != first).unwrap();
    ensure(*second == partner, || format!("second matrix is\n{second}"))?;
    Ok("9 single-retraction cases, pair of 2 reproduced".into())
}

/// `[I_p 0; P 0]` with entries of `P` in `0..=max` and no zero row in `P`.
fn random_block_form(rng: &mut StdRng, n: usize, max: u64) -> ExponentMatrix {
    let p = rng.random_range(1..=n);
    let mut rows = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        if i < p {
            row[i] = 1;
            continue;
        }
        loop {
            for entry in row.iter_mut().take(p) {
                *entry = rng.random_range(0..=max);
            }
            if row.iter().any(|&x| x != 0) {
                break;
            }
        }
    }
    ExponentMatrix::from_rows(&rows).unwrap()
}

fn witness(censuses: &[Census]) -> Outcome {
    let check = |s: &ExponentMatrix| -> Result<(), String> {
        let w = polynomial_ring_witness(s, Domain::Integers).map_err(|e| format!("{e} on\n{s}"))?;
        ensure(w.verified && w.p as u64 == s.trace(), || {
            format!("witness fails on\n{s}")
        })
    };
    let mut census_cases = 0;
    for census in censuses {
        for a in census.nondegenerate() {
            check(&standardize(a).unwrap().0)?;
            census_cases += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(RANDOM_WITNESS_SEED);
    for _ in 0..RANDOM_WITNESS_CASES {
        let s = random_block_form(&mut rng, 6, 5);
        ensure(s.is_idempotent().unwrap() && is_standard(&s), || {
            format!("bad sample\n{s}")
        })?;
        check(&s)?;
    }
    Ok(format!(
        "{census_cases} standardized census matrices, {RANDOM_WITNESS_CASES} random 6x6"
    ))
}

/// Candidate coefficients for the infinite domains.
fn sample_coefficients(domain: Domain) -> Vec<DomainElement> {
    let texts: &[&str] = match domain {
        Domain::Integers => &["1", "-1", "2", "-2", "3", "-3"],
        _ => &[
            "1", "-1", "2", "-2", "1/2", "-1/2", "3", "2/3", "-3/2", "5/7",
        ],
    };
    texts
        .iter()
        .map(|t| domain.parse_element(t).unwrap())
        .collect()
}

fn decorations(domain: Domain, monic: &MonomialMap) -> Vec<Vec<DomainElement>> {
    match domain {
        Domain::IntegersMod(_) => enumerate_decorations(monic).unwrap(),
        _ => {
            let candidates = sample_coefficients(domain);
            (0..monic.n())
                .map(|_| candidates.iter().cloned())
                .multi_cartesian_product()
                .filter(|lambdas| decorate(monic, lambdas).unwrap().is_retraction())
                .collect()
        }
    }
}

fn unit_coefficients(censuses: &[Census]) -> Outcome {
    let domains = [
        Domain::Integers,
        Domain::Rationals,
        Domain::integers_mod(5).unwrap(),
        Domain::integers_mod(7).unwrap(),
    ];
    let mut consistent = 0;
    let mut non_unit_rejected = 0;
    for domain in domains {
        for census in censuses {
            for a in census.nondegenerate() {
                let monic = a.to_monic_map(domain);
                let found = decorations(domain, &monic);
                ensure(!found.is_empty(), || {
                    format!("no decoration of\n{a}\nover {domain}")
                })?;
                for lambdas in &found {
                    let map = decorate(&monic, lambdas).unwrap();
                    ensure(map.is_retraction(), || {
                        format!("{map:?} is not a retraction")
                    })?;
                    let assoc = associated_monic(&map).map_err(|e| e.to_string())?;
                    ensure(assoc.lambda_consistent && assoc.monic_retraction, || {
                        format!("inconsistent association for {map:?}")
                    })?;
                    ensure(assoc.all_lambdas_units, || {
                        format!("non-unit coefficient in {lambdas:?} over {domain}")
                    })?;
                    consistent += 1;
                }
            }
        }
        if domain == Domain::Integers {
            let two = domain.from_i64(2);
            let map = decorate(&MonomialMap::identity(domain, 1), &[two]).unwrap();
            ensure(!map.is_retraction(), || "X1 -> 2 X1 accepted over Z".into())?;
            non_unit_rejected += 1;
        }
    }

    let z6 = Domain::integers_mod(6).unwrap();
    let three = z6.from_i64(3);
    let map = decorate(&MonomialMap::identity(z6, 1), std::slice::from_ref(&three)).unwrap();
    ensure(map.is_retraction(), || {
        "X1 -> 3 X1 rejected over Z/6".into()
    })?;
    let assoc = associated_monic(&map).map_err(|e| e.to_string())?;
    ensure(!assoc.all_lambdas_units, || {
        "3 reported as a unit of Z/6".into()
    })?;
    ensure(assoc.idempotent_witnesses == vec![(0, three)], || {
        format!("witnesses {:?}", assoc.idempotent_witnesses)
    })?;
    Ok(format!(
        "{consistent} consistent decorations all unit, {non_unit_rejected} non-unit rejected over Z, Z/6 witness (1, 3)"
    ))
}

fn standardization(censuses: &[Census]) -> Outcome {
    let mut checked = 0;
    for census in censuses {
        for a in census.matrices() {
            let (s, sigma) = standardize(a).map_err(|e| e.to_string())?;
            ensure(is_standard(&s) && s.is_idempotent().unwrap(), || {
                format!("bad result for\n{a}")
            })?;
            ensure(conjugate(a, &sigma).unwrap() == s, || {
                format!("sigma does not reproduce\n{s}")
            })?;
            if a.is_nondegenerate() {
                ensure(has_block_form(&s), || format!("no block form for\n{s}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} census matrices"))
}

fn cli_contract() -> Outcome {
    let mut goldens = 0;
    for name in common::EXAMPLE_FIXTURES {
        for command in common::GOLDEN_COMMANDS {
            let expected = std::fs::read_to_string(common::golden(command, name))
                .map_err(|e| format!("{command}-{name}: {e}"))?;
            let (stdout, stderr, status) = common::run_on(command, name);
            ensure(status == 0 && stdout == expected, || {
                format!("{command} {name}: exit {status}\n{stdout}{stderr}")
            })?;
            goldens += 1;
        }
    }
    for &(command, name, expected) in common::EXIT_CASES {
        common::check_exit_case(command, name, expected)?;
    }
    let round_trips = common::check_round_trips()?;
    Ok(format!(
        "{goldens} golden files, {} exit cases, {round_trips} round trips",
        common::EXIT_CASES.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let censuses = censuses();
    let criteria: Vec<Criterion> = vec![
        (
            "1 column characterization equals idempotency",
            Box::new(characterization),
        ),
        (
            "2 structure clauses and rank",
            Box::new(|| structure_clauses(&censuses)),
        ),
        (
            "3 retraction iff idempotent matrix",
            Box::new(correspondence),
        ),
        (
            "4 same-retract counting against the oracle",
            Box::new(|| counting(&censuses)),
        ),
        ("5 worked examples", Box::new(worked_examples)),
        ("6 polynomial ring witness", Box::new(|| witness(&censuses))),
        (
            "7 unit coefficients and the Z/6 boundary",
            Box::new(|| unit_coefficients(&censuses)),
        ),
        ("8 standardization", Box::new(|| standardization(&censuses))),
        ("9 command-line contract", Box::new(cli_contract)),
    ];
    let mut failures = 0;
    for (name, check) in &criteria {
        let t = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match result {
            Ok(detail) => println!("PASS  {name} [{ms} ms]: {detail}"),
            Err(reason) => {
                failures += 1;
                println!("FAIL  {name} [{ms} ms]: {reason}");
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:?}",
        criteria.len() - failures,
        criteria.len(),
        start.elapsed()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
