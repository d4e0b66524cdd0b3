//! Acceptance suite: one test per acceptance criterion, each printing a
//! single PASS line (visible with `--nocapture`). Every tolerance is exact;
//! runtime caps are asserted where the criterion states one.
//!
//! Ranges: all valid SU instances with p + p' <= 6 (125 of them) and all
//! valid Sp instances with n <= 5 (30), enumerated in canonical parameter
//! order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use flag_concavity::concavity::{attractiveness, d_ma, report};
use flag_concavity::domains::DomainSpec;
use flag_concavity::linalg::{rat, Zero};
use flag_concavity::oracle::{
    boundary_polynomial, build_basis, q0_member, random_functional, transversality_check,
    Functional, LinearizationTable,
};
use flag_concavity::roots::Root;
use flag_concavity_cli::verify;

fn su_range() -> Vec<DomainSpec> {
    DomainSpec::enumerate_su(6)
}

fn sp_range() -> Vec<DomainSpec> {
    DomainSpec::enumerate_sp(5)
}

fn all_instances() -> Vec<DomainSpec> {
    let mut specs = su_range();
    specs.extend(sp_range());
    specs
}

fn pass(number: u32, name: &str, elapsed: Duration) {
    println!(
        "criterion {:02} ({}): PASS in {:.2?}",
        number, name, elapsed
    );
}

/// Λ(𝔰⁺∩𝔮₀), Λ(𝔰⁻∩𝔮₀), Λ(𝔲⁻) as literally displayed index ranges, written
/// independently of the engine's membership rules.
fn sp_displayed_lists(
    n: usize,
    p: usize,
    q: usize,
) -> (BTreeSet<Root>, BTreeSet<Root>, BTreeSet<Root>) {
    let mut s_plus = BTreeSet::new();
    for j in 1..=(n - q) {
        for k in j..=(n - q) {
            s_plus.insert(Root::symmetric_sum(n, j, k));
        }
    }
    for j in 1..=p {
        for k in (n - q + 1)..=n {
            s_plus.insert(Root::symmetric_sum(n, j, k));
        }
    }
    let mut s_minus = BTreeSet::new();
    for j in (p + 1)..=n {
        for k in j..=n {
            s_minus.insert(Root::symmetric_sum(n, j, k).negated());
        }
    }
    for j in 1..=p {
        for k in (n - q + 1)..=n {
            s_minus.insert(Root::symmetric_sum(n, j, k).negated());
        }
    }
    let mut u_minus = BTreeSet::new();
    for j in (p + 1)..=(n - q) {
        for k in 1..=p {
            u_minus.insert(Root::difference(n, j, k));
        }
    }
    for j in (n - q + 1)..=n {
        for k in 1..=(n - q) {
            u_minus.insert(Root::difference(n, j, k));
        }
    }
    (s_plus, s_minus, u_minus)
}

#[test]
fn criterion_01_root_list_fidelity() {
    let start = Instant::now();
    for (n, p, q) in [(3u32, 1u32, 1u32), (4, 1, 2), (5, 2, 2)] {
        let spec = DomainSpec::sp(n, p, q);
        let part = spec.partition().unwrap();
        let (s_plus, s_minus, u_minus) = sp_displayed_lists(n as usize, p as usize, q as usize);
        let q0_plus: BTreeSet<Root> = part
            .lambda_q0()
            .iter()
            .filter(|r| r.coefficient_sum() > 0)
            .cloned()
            .collect();
        let q0_minus: BTreeSet<Root> = part
            .lambda_q0()
            .iter()
            .filter(|r| r.coefficient_sum() < 0)
            .cloned()
            .collect();
        assert_eq!(q0_plus, s_plus, "s+ cap q0 at ({n},{p},{q})");
        assert_eq!(q0_minus, s_minus, "s- cap q0 at ({n},{p},{q})");
        assert_eq!(*part.lambda_u_minus(), u_minus, "u- at ({n},{p},{q})");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "runtime cap exceeded");
    pass(1, "root-list fidelity", elapsed);
}

#[test]
fn criterion_02_membership_adjudication() {
    let start = Instant::now();
    for spec in all_instances() {
        let q0 = spec.q0_roots().unwrap();
        for delta in spec.root_system().unwrap().roots() {
            assert_eq!(
                q0_member(delta, &spec).unwrap(),
                q0.contains(delta),
                "membership disagreement at {delta} for {spec:?}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "runtime cap exceeded");
    pass(2, "membership adjudication", elapsed);
}

#[test]
fn criterion_03_rank_identity() {
    let start = Instant::now();
    for spec in all_instances() {
        let part = spec.partition().unwrap();
        let basis = build_basis(&spec).unwrap();
        let table = LinearizationTable::build(&part, &basis).unwrap();
        for alpha in part.phi() {
            let at = attractiveness(alpha, &part).unwrap();
            let matrix = table.matrix(&Functional::coordinate(alpha));
            assert_eq!(
                matrix.rank(),
                at.size(),
                "rank identity failed at {alpha} for {spec:?}"
            );
            // sharper than the count: the nonzero columns are exactly At(α),
            // so every witnessing structure constant is nonzero
            let support: BTreeSet<&Root> = table
                .betas()
                .iter()
                .enumerate()
                .filter(|(col, _)| (0..matrix.rows()).any(|row| !matrix.get(row, *col).is_zero()))
                .map(|(_, beta)| beta)
                .collect();
            let expected: BTreeSet<&Root> = at.betas().collect();
            assert_eq!(support, expected, "bracket support at {alpha} for {spec:?}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "runtime cap exceeded");
    pass(3, "rank identity", elapsed);
}

#[test]
fn criterion_04_linearized_theorem_main() {
    let start = Instant::now();
    let mut violations = 0usize;
    for spec in all_instances() {
        let part = spec.partition().unwrap();
        if part.phi().is_empty() {
            continue;
        }
        let basis = build_basis(&spec).unwrap();
        let table = LinearizationTable::build(&part, &basis).unwrap();
        let (bound, _) = d_ma(&part);
        for trial in 0..100u32 {
            let l = random_functional(verify::trial_seed(0, &spec, trial), &part).unwrap();
            if table.codim(&l) < bound {
                violations += 1;
            }
        }
    }
    assert_eq!(violations, 0);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "runtime cap exceeded");
    pass(
        4,
        "linearized codim >= d_ma on 100 seeded functionals",
        elapsed,
    );
}

#[test]
fn criterion_05_linearized_maximum_proposition() {
    let start = Instant::now();
    let mut violations = 0usize;
    for spec in all_instances() {
        let part = spec.partition().unwrap();
        if part.phi().is_empty() {
            continue;
        }
        let basis = build_basis(&spec).unwrap();
        let table = LinearizationTable::build(&part, &basis).unwrap();
        let coordinate_min = part
            .phi()
            .iter()
            .map(|alpha| table.codim(&Functional::coordinate(alpha)))
            .min()
            .unwrap();
        for trial in 0..100u32 {
            let l = random_functional(verify::trial_seed(0, &spec, trial), &part).unwrap();
            if table.codim(&l) < coordinate_min {
                violations += 1;
            }
        }
    }
    assert_eq!(violations, 0);
    pass(
        5,
        "extremum attained at a coordinate functional",
        start.elapsed(),
    );
}

#[test]
fn criterion_06_transversality() {
    let start = Instant::now();
    for spec in all_instances() {
        let part = spec.partition().unwrap();
        let basis = build_basis(&spec).unwrap();
        for alpha in part.phi() {
            assert!(
                transversality_check(alpha, &part, &basis).unwrap(),
                "transversality failed at {alpha} for {spec:?}"
            );
        }
    }
    pass(6, "R_alpha transversal to the kernel", start.elapsed());
}

/// The two instances inside p + p' <= 6 where r' = p' does not make the
/// printed SU formula exact: the lower spot family is empty there, so the
/// formula's second argument is not realized by any root. Confirmed by the
/// exhaustive At enumeration this suite runs.
const SU_FULL_B_BLOCK_EXCEPTIONS: [(u32, u32, u32, u32, usize, u64); 2] =
    [(4, 1, 3, 1, 3, 2), (5, 1, 4, 1, 4, 2)];

#[test]
fn criterion_07_su_closed_form_comparison() {
    let start = Instant::now();
    let mut checked_exceptions = 0;
    for spec in su_range() {
        let DomainSpec::Su {
            p,
            p_prime,
            r,
            r_prime,
        } = spec
        else {
            unreachable!()
        };
        let rep = report(&spec).unwrap();
        // the printed formula is evaluated on every instance
        assert_eq!(
            rep.paper_bound,
            ((r + p_prime - r_prime) as u64).min((p - r + p_prime) as u64)
        );
        if r_prime == p_prime {
            match SU_FULL_B_BLOCK_EXCEPTIONS
                .iter()
                .find(|(ep, epp, er, erp, _, _)| (p, p_prime, r, r_prime) == (*ep, *epp, *er, *erp))
            {
                Some((_, _, _, _, expected_d_ma, expected_bound)) => {
                    assert_eq!(rep.d_ma, *expected_d_ma, "at {spec:?}");
                    assert_eq!(rep.paper_bound, *expected_bound, "at {spec:?}");
                    assert!(!rep.paper_formula_match);
                    checked_exceptions += 1;
                }
                None => assert!(
                    rep.paper_formula_match,
                    "r' = p' instance {spec:?} must match the printed formula \
                     (d_ma {} vs bound {})",
                    rep.d_ma, rep.paper_bound
                ),
            }
        }
        if (p, p_prime, r, r_prime) == (1, 2, 1, 1) {
            assert_eq!(rep.d_ma, 1);
            assert_eq!(rep.paper_bound, 2);
            assert!(!rep.paper_formula_match);
        }
    }
    assert_eq!(checked_exceptions, SU_FULL_B_BLOCK_EXCEPTIONS.len());
    println!(
        "criterion 07 note: printed SU formula confirmed exact on r' = p' \
         except (4,1,3,1) and (5,1,4,1), where d_ma exceeds it (3 vs 2, 4 vs 2)"
    );
    pass(7, "SU closed-form comparison", start.elapsed());
}

#[test]
fn criterion_08_sp_closed_form_comparison() {
    let start = Instant::now();
    for spec in sp_range() {
        let DomainSpec::Sp { n, p, q } = spec else {
            unreachable!()
        };
        let rep = report(&spec).unwrap();
        assert_eq!(rep.paper_bound, ((n - p) as u64).min((n - q) as u64));
        if (n, p, q) == (3, 1, 1) {
            assert_eq!(rep.d_ma, 1);
            assert_eq!(rep.paper_bound, 2);
            assert!(!rep.paper_formula_match);
        }
    }
    pass(8, "Sp closed-form comparison", start.elapsed());
}

#[test]
fn criterion_09_degenerate_convex_cases() {
    let start = Instant::now();
    let mut degenerate_seen = 0;
    for spec in all_instances() {
        let part = spec.partition().unwrap();
        let rep = report(&spec).unwrap();
        assert_eq!(rep.convex_degenerate, part.lambda_u_minus().is_empty());
        if part.lambda_u_minus().is_empty() {
            degenerate_seen += 1;
            assert_eq!(rep.d_ma, 0, "degenerate {spec:?} must report zero");
            assert!(rep.convex_degenerate);
            assert_eq!(rep.argmin, *part.phi());
        }
    }
    assert!(degenerate_seen > 0, "range must contain degenerate cases");
    pass(9, "degenerate convex cases report zero", start.elapsed());
}

/// xorshift64* used only to steer the sampling of (xi, gamma, L) triples.
struct Sampler(u64);

impl Sampler {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn small_coeff(&mut self) -> i64 {
        (self.next() % 7) as i64 - 3
    }
}

#[test]
fn criterion_10_first_order_escape() {
    let start = Instant::now();
    for spec in all_instances() {
        let part = spec.partition().unwrap();
        let basis = build_basis(&spec).unwrap();
        let betas: Vec<Root> = part.lambda_u_minus().iter().cloned().collect();
        let gammas: Vec<Root> = part.gamma().iter().cloned().collect();
        let escape_possible = !betas.is_empty()
            && !gammas.is_empty()
            && part
                .phi()
                .iter()
                .any(|alpha| attractiveness(alpha, &part).unwrap().size() > 0);
        if !escape_possible {
            continue;
        }
        let mut sampler = Sampler(verify::instance_seed(0xe5ca9e, &spec) | 1);
        let mut found = 0;
        let mut attempts = 0;
        while found < 20 {
            attempts += 1;
            assert!(
                attempts < 2000,
                "could not find 20 escaping triples for {spec:?}"
            );
            let mut xi = std::collections::BTreeMap::new();
            for beta in &betas {
                let c = sampler.small_coeff();
                if c != 0 {
                    xi.insert(beta.clone(), rat(c));
                }
            }
            let gamma = gammas[sampler.below(gammas.len())].clone();
            let l = random_functional(sampler.next(), &part).unwrap();
            let mut xi_matrix = flag_concavity::linalg::Matrix::zeros(basis.dim(), basis.dim());
            for (root, c) in &xi {
                xi_matrix = xi_matrix.plus(&basis.vector(root).unwrap().scaled(c));
            }
            let first_order = l
                .apply(&xi_matrix.commutator(basis.vector(&gamma).unwrap()), &basis)
                .unwrap();
            if first_order.is_zero() {
                continue;
            }
            let poly = boundary_polynomial(&xi, &gamma, &l, &part, &basis).unwrap();
            assert!(!poly.is_zero(), "polynomial vanished for {spec:?}");
            assert_eq!(poly.coeff(1), first_order, "t-coefficient for {spec:?}");
            assert!(poly.coeff(0).is_zero());
            found += 1;
        }
    }
    pass(10, "first-order escape", start.elapsed());
}

#[test]
fn criterion_11_verify_is_byte_deterministic() {
    let start = Instant::now();
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_flag-concavity"))
            .args([
                "verify", "sp", "--max-n", "4", "--trials", "50", "--seed", "7",
            ])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(
        first.stdout, second.stdout,
        "verify output must be byte-identical"
    );
    pass(11, "verify output byte-determinism", start.elapsed());
}
