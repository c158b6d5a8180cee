//! Acceptance suite. Each test prints one pass/fail line for its
//! criterion, checks every stated value exactly, and enforces the stated
//! runtime budget.

mod common;

use std::time::{Duration, Instant};

use liaison_forge::corpus::{self, ht_example_family};
use liaison_forge::error::Error;
use liaison_forge::groebner::{
    height, ideal_equal, intersect, minimal_generator_count, saturate_by, saturate_irrelevant,
    IdealBasis,
};
use liaison_forge::liaison::{
    biliaison_chain, biliaison_chain_with, check_ht1, check_subm, classify, descend_step,
    sylvester_exact_identity, sylvester_random_sweep, DescentOptions, Verdict,
};
use liaison_forge::pmatrix::{binomial, combinations, minor_ideal, MatrixStructure, PolyMatrix};
use liaison_forge::ring::{FieldSpec, PolyRing, Polynomial};

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

struct Criterion {
    number: u32,
    label: &'static str,
    budget: Duration,
    started: Instant,
}

impl Criterion {
    fn start(number: u32, label: &'static str, budget_secs: u64) -> Criterion {
        Criterion {
            number,
            label,
            budget: Duration::from_secs(budget_secs),
            started: Instant::now(),
        }
    }

    fn finish(self, pass: bool) {
        let elapsed = self.started.elapsed();
        let within = elapsed <= self.budget;
        println!(
            "criterion {}: {} — {} ({:.2?}, budget {:?})",
            self.number,
            if pass && within { "PASS" } else { "FAIL" },
            self.label,
            elapsed,
            self.budget
        );
        assert!(pass, "criterion {} value checks failed", self.number);
        assert!(
            within,
            "criterion {} exceeded its runtime budget: {elapsed:.2?}",
            self.number
        );
    }
}

#[test]
fn criterion_1_veronese_pipeline() {
    let c = Criterion::start(1, "Veronese classification, descent, and terminal CI", 10);
    let entry = corpus::builtin("veronese").unwrap();
    let report = classify(&entry.matrix, 2).unwrap();
    let mut pass = report.verdict == Verdict::SymmetricDeterminantal;
    pass &= report.actual_codim == 3;
    let ideal = minor_ideal(&entry.matrix, 2).unwrap();
    pass &= minimal_generator_count(&ideal).unwrap() == 6;

    let chain = biliaison_chain(&entry.matrix, 2, 0).unwrap();
    pass &= chain.steps.len() == 1;
    let step = &chain.steps[0];
    pass &= step.shift == 1;
    pass &= step.heights.t_of_m == 3 && step.heights.t_of_o == 2 && step.heights.t1_of_n == 3;
    pass &= step.identities_failed == 0;
    pass &= chain.terminal_mu == 3 && chain.terminal_height == 3 && chain.terminal_is_ci;
    c.finish(pass);
}

#[test]
fn criterion_2_generic_symmetric_codimension_grid() {
    let c = Criterion::start(2, "generic symmetric codimension grid m <= 4", 300);
    let mut pass = true;
    for m in 1..=4usize {
        for t in 1..=m {
            let entry = corpus::builtin(&format!("generic_sym({m},{t})")).unwrap();
            assert_eq!(entry.ring.characteristic(), 32003);
            let ideal = minor_ideal(&entry.matrix, t).unwrap();
            let ht = height(&ideal).unwrap();
            let expected = binomial(m as i64 - t as i64 + 2, 2);
            if ht != expected {
                eprintln!("generic_sym({m},{t}): ht = {ht}, expected {expected}");
                pass = false;
            }
        }
    }
    c.finish(pass);
}

#[test]
fn criterion_3_almost_symmetric_grid() {
    let c = Criterion::start(3, "almost-symmetric codimension grid m <= 4", 300);
    let mut pass = true;
    for m in 2..=4usize {
        for t in 1..m {
            let entry = corpus::builtin(&format!("generic_almost({m},{t})")).unwrap();
            let ideal = minor_ideal(&entry.matrix, t).unwrap();
            let ht = height(&ideal).unwrap();
            let expected = binomial(m as i64 - t as i64 + 2, 2) - 1;
            if ht != expected {
                eprintln!("generic_almost({m},{t}): ht = {ht}, expected {expected}");
                pass = false;
            }
        }
    }
    c.finish(pass);
}

#[test]
fn criterion_4_worked_example_over_q() {
    let c = Criterion::start(4, "four-variable worked example over Q with a = 1", 10);
    let fam = ht_example_family(1, FieldSpec::Rationals).unwrap();
    let mut pass = true;
    pass &= height(&minor_ideal(&fam.o, 2).unwrap()).unwrap() == 2;
    pass &= height(&minor_ideal(&fam.o, 1).unwrap()).unwrap() == 4;
    pass &= height(&minor_ideal(&fam.n, 1).unwrap()).unwrap() == 2;
    pass &= height(&minor_ideal(&fam.n_prime, 1).unwrap()).unwrap() == 3;
    let subm = check_subm(&fam.o, 2).unwrap();
    pass &= subm.condition2 && !subm.sufficient;
    let subm_prime = check_subm(&fam.o_prime, 2).unwrap();
    pass &= subm_prime.sufficient;
    c.finish(pass);
}

#[test]
fn criterion_5_characteristic_two_counterexample() {
    let c = Criterion::start(5, "characteristic-2 obstruction", 10);
    let entry = corpus::builtin("bruns_char2").unwrap();
    let ring = entry.ring.clone();
    assert_eq!(ring.characteristic(), 2);
    let ideal = minor_ideal(&entry.matrix, 2).unwrap();

    // (x, y, z)^2 over Z/2
    let v = |i: usize| Polynomial::var(&ring, i);
    let mut square_gens = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            square_gens.push(v(i).mul(&v(j)).unwrap());
        }
    }
    let square = IdealBasis::new(&ring, square_gens).unwrap();

    let mut pass = ideal_equal(&ideal, &square).unwrap();
    pass &= height(&ideal).unwrap() == 3;

    let opts = DescentOptions {
        force_char_two: true,
        ..Default::default()
    };
    match biliaison_chain_with(&entry.matrix, 2, 0, &opts) {
        Err(Error::ChainObstruction {
            expected_ht_t_of_o,
            attempts,
            ..
        }) => {
            pass &= expected_ht_t_of_o == 2;
            pass &= attempts.len() == 8;
            pass &= attempts.iter().all(|a| a.ht_t_of_o == 1);
        }
        other => {
            eprintln!("expected a chain obstruction, got {other:?}");
            pass = false;
        }
    }
    c.finish(pass);
}

#[test]
fn criterion_6_height_drop_bound_across_corpus() {
    let c = Criterion::start(6, "height drop <= 1 across corpus symmetric entries", 300);
    let mut pass = true;
    for name in corpus::names() {
        let entry = corpus::builtin(&name).unwrap();
        let m = &entry.matrix;
        if m.structure() != MatrixStructure::Symmetric
            || !m.no_invertible_entries()
            || m.ring().characteristic() == 2
            || m.rows() < 2
        {
            continue;
        }
        for seed in 0..5u64 {
            let report = check_ht1(m, entry.t, seed).unwrap();
            if !report.ok {
                eprintln!("{name} seed {seed}: delta = {}", report.delta);
                pass = false;
            }
        }
    }
    c.finish(pass);
}

#[test]
fn criterion_7_identity_suites() {
    let c = Criterion::start(7, "exact minor identities and cross memberships", 300);
    let mut pass = true;

    // (a) the exact identity as a polynomial equality on generic matrices
    for size in [3usize, 4] {
        let vars: Vec<String> = (0..size * size).map(|k| format!("m{k}")).collect();
        let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let ring = PolyRing::prime_field(&var_refs, 32003).unwrap();
        let entries = (0..size * size)
            .map(|k| Polynomial::var(&ring, k))
            .collect();
        let m = PolyMatrix::new(&ring, size, size, entries, MatrixStructure::General).unwrap();
        for a in 2..size {
            for rows in combinations(size, a) {
                for cols in combinations(size, a) {
                    for er in (rows[a - 1] + 1)..size {
                        for ec in (cols[a - 1] + 1)..size {
                            if !sylvester_exact_identity(&m, &rows, &cols, er, ec).unwrap() {
                                eprintln!(
                                    "exact identity failed: size {size}, rows {rows:?}, cols {cols:?}, extra ({er},{ec})"
                                );
                                pass = false;
                            }
                        }
                    }
                }
            }
        }
        // membership form on seeded draws for a random degree-one matrix
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let lin_ring = PolyRing::prime_field(&["u0", "u1", "u2", "u3", "u4", "u5"], 32003).unwrap();
        let lin_entries = (0..size * size)
            .map(|_| common::random_homogeneous(&lin_ring, &mut rng, 4, 1))
            .collect();
        let lin =
            PolyMatrix::new(&lin_ring, size, size, lin_entries, MatrixStructure::General).unwrap();
        let (checked, failed) = sylvester_random_sweep(&lin, 2, 11, 50).unwrap();
        if checked != 50 || failed != 0 {
            eprintln!("membership sweep on size {size}: {failed}/{checked} failed");
            pass = false;
        }
    }

    // (b) cross-minor memberships on the Veronese and generic 4x4 steps
    let veronese = corpus::builtin("veronese").unwrap();
    let step = descend_step(&veronese.matrix, 2, 0).unwrap();
    pass &= step.identities_failed == 0;
    pass &= step.identities_checked == binomial(2, 1).pow(4) as usize;

    let gen4 = corpus::builtin("generic_sym(4,3)").unwrap();
    let step = descend_step(&gen4.matrix, 3, 0).unwrap();
    pass &= step.identities_failed == 0;
    pass &= step.identities_checked == binomial(3, 2).pow(4) as usize;
    pass &= step.shift == 1;
    pass &= step.heights.t_of_m == 3 && step.heights.t_of_o == 2 && step.heights.t1_of_n == 3;
    c.finish(pass);
}

#[test]
fn criterion_8_engine_property_suite() {
    let c = Criterion::start(8, "basis closure, membership oracle, saturation laws", 300);
    let mut pass = true;

    // S-polynomial closure and shuffle canonicity on every corpus basis
    for name in corpus::names() {
        let entry = corpus::builtin(&name).unwrap();
        let ideal = minor_ideal(&entry.matrix, entry.t).unwrap();
        let gb = ideal.groebner();
        if !common::spoly_closure_holds(gb.elements()) {
            eprintln!("{name}: an S-polynomial fails to reduce to zero");
            pass = false;
        }
        let mut shuffled = ideal.generators().to_vec();
        shuffled.reverse();
        let gb2 = IdealBasis::new(entry.matrix.ring(), shuffled)
            .unwrap()
            .groebner();
        if gb.elements() != gb2.elements() {
            eprintln!("{name}: reduced basis depends on generator order");
            pass = false;
        }
    }

    // membership agreement with the degree-bounded linear-algebra oracle
    let ring = PolyRing::prime_field(&["a", "b", "c", "d"], 32003).unwrap();
    let mut agreements = 0usize;
    for seed in 0..50u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(500 + seed);
        let gens: Vec<Polynomial> = (0..3)
            .map(|k| common::random_homogeneous(&ring, &mut rng, 3, 1 + (k % 2) as u32))
            .filter(|f| !f.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = IdealBasis::new(&ring, gens.clone()).unwrap();
        let gb = ideal.groebner();
        let max_gen_deg = gens
            .iter()
            .map(|g| g.total_degree().unwrap())
            .max()
            .unwrap();
        // a constructed member and a random probe of each degree
        let mut probes: Vec<Polynomial> = Vec::new();
        let combo = gens[0]
            .mul(&common::random_homogeneous(&ring, &mut rng, 2, 1))
            .unwrap();
        probes.push(combo);
        probes.push(common::random_homogeneous(&ring, &mut rng, 3, 2));
        probes.push(common::random_homogeneous(&ring, &mut rng, 3, 3));
        for f in probes {
            if f.is_zero() {
                continue;
            }
            let bound = f.total_degree().unwrap() + max_gen_deg;
            let via_nf = gb.contains(&f).unwrap();
            let via_matrix = common::macaulay_member(&f, &gens, bound);
            if via_nf != via_matrix {
                eprintln!("seed {seed}: normal form says {via_nf}, oracle says {via_matrix}");
                pass = false;
            } else {
                agreements += 1;
            }
        }
    }
    if agreements < 50 {
        eprintln!("only {agreements} membership agreements were exercised");
        pass = false;
    }

    // saturation idempotence and per-variable stability on every corpus ideal
    for name in corpus::names() {
        let entry = corpus::builtin(&name).unwrap();
        let ideal = minor_ideal(&entry.matrix, entry.t).unwrap();
        let sat = saturate_irrelevant(&ideal).unwrap();
        let sat2 = saturate_irrelevant(&sat).unwrap();
        if !ideal_equal(&sat, &sat2).unwrap() {
            eprintln!("{name}: saturation is not idempotent");
            pass = false;
        }
        let ring = entry.matrix.ring().clone();
        let mut intersection: Option<IdealBasis> = None;
        for i in 0..ring.num_vars() {
            let per_var = saturate_by(&sat, &Polynomial::var(&ring, i)).unwrap();
            intersection = Some(match intersection {
                None => per_var,
                Some(acc) => intersect(&acc, &per_var).unwrap(),
            });
        }
        if !ideal_equal(&intersection.unwrap(), &sat).unwrap() {
            eprintln!("{name}: per-variable saturations do not intersect back");
            pass = false;
        }
    }
    c.finish(pass);
}
