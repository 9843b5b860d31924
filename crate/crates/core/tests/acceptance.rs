//! End-to-end acceptance checks, one test (and one printed pass/fail line)
//! per criterion. Run with --nocapture to see the lines as they complete.

use weylgrad::abgroups::{aut_bicharacter_bruteforce, standard_bicharacter, MatrixCriterion};
use weylgrad::cli::verify_suite;
use weylgrad::gradings::{builtin_grading, universal_abelian_group, GradingParams};
use weylgrad::weyl::{weyl_group, weyl_matrix_theorem_check, Strategy};

fn record(n: usize, desc: &str, pass: bool) {
    println!("criterion {:2} ({}): {}", n, desc, if pass { "pass" } else { "fail" });
    assert!(pass, "criterion {} failed: {}", n, desc);
}

#[test]
fn criterion_01_cartan_cayley() {
    let r = weyl_group("cartan_cayley", None, Strategy::Full).unwrap();
    record(
        1,
        "octonion Cartan grading: Weyl group order 12",
        r.lower_order == 12 && r.upper_order == 12 && r.all_checks_pass(),
    );
}

#[test]
fn criterion_02_cd_cayley() {
    let r = weyl_group("cd_cayley", None, Strategy::Full).unwrap();
    let all_extend = r
        .structure_checks
        .iter()
        .any(|c| c.name == "all-automorphisms-extend" && c.pass);
    record(
        2,
        "octonion Z_2^3 grading: all 168 automorphisms extend, closure 168",
        all_extend && r.lower_order == 168 && r.upper_order == 168 && r.all_checks_pass(),
    );
}

#[test]
fn criterion_03_matrix_theorem() {
    let mut pass = true;
    for (l, k, order) in [(vec![2i64], 2usize, 48u64), (vec![3], 1, 24), (vec![2], 3, 576)] {
        let r = weyl_matrix_theorem_check(&l, k).unwrap();
        pass &= r.lower_order == order && r.upper_order == order && r.all_checks_pass();
    }
    record(3, "matrix gradings: orders 48, 24, 576 with action laws", pass);
}

#[test]
fn criterion_04_aut_bicharacter_oracles() {
    let mut pass = true;
    let cases: [(&[i64], Option<u64>); 5] =
        [(&[2], Some(6)), (&[3], Some(24)), (&[2, 2], Some(720)), (&[4], Some(48)), (&[2, 4], None)];
    for (l_list, expected) in cases {
        let (t, beta) = standard_bicharacter(l_list);
        let brute = aut_bicharacter_bruteforce(&t, &beta, 256).unwrap();
        let criterion = MatrixCriterion::new(&t, &beta).unwrap();
        pass &= brute.len() as u64 == criterion.count();
        pass &= brute.iter().all(|mu| criterion.accepts(&mu.matrix));
        if let Some(n) = expected {
            pass &= brute.len() as u64 == n;
        }
    }
    record(4, "Aut(T, beta): brute force agrees with the matrix criterion", pass);
}

#[test]
fn criterion_05_albert_cartan() {
    let r = weyl_group("albert_cartan", None, Strategy::Full).unwrap();
    record(
        5,
        "Albert Cartan grading: order 1152, Phi of type F_4",
        r.lower_order == 1152 && r.upper_order == 1152 && r.all_checks_pass(),
    );
}

#[test]
fn criterion_06_albert_z25() {
    let r = weyl_group("albert_z25", None, Strategy::Full).unwrap();
    record(
        6,
        "Albert Z_2^5 grading: closure 64512 equals the structured count",
        r.lower_order == 64512 && r.upper_order == 64512 && r.all_checks_pass(),
    );
}

#[test]
fn criterion_07_albert_zz23() {
    let r = weyl_group("albert_zz23", None, Strategy::Full).unwrap();
    record(
        7,
        "Albert ZxZ_2^3 grading: closure 2688 equals Aut(ZxZ_2^3)",
        r.lower_order == 2688 && r.upper_order == 2688 && r.all_checks_pass(),
    );
}

#[test]
fn criterion_08_albert_z33_exhaustive() {
    let gradings = verify_suite("gradings", Strategy::Full).unwrap();
    let defect = gradings
        .iter()
        .any(|c| c.name == "z33-defect-distinguishes-gradings" && c.pass);
    let r = weyl_group("albert_z33", None, Strategy::Full).unwrap();
    record(
        8,
        "Albert Z_3^3 grading: defect separates the pair, exhaustive filter gives SL_3(3)",
        defect && r.lower_order == 5616 && r.upper_order == 5616 && r.all_checks_pass(),
    );
}

#[test]
fn criterion_09_structural_suites() {
    let checks = verify_suite("algebras", Strategy::Full).unwrap();
    let pass = !checks.is_empty() && checks.iter().all(|c| c.pass);
    record(9, "structural identity suites all pass exhaustively", pass);
}

#[test]
fn criterion_10_universal_groups() {
    let expect: [(&str, Option<GradingParams>, usize, Vec<i64>); 8] = [
        ("cartan_cayley", None, 2, vec![]),
        ("cd_cayley", None, 0, vec![2, 2, 2]),
        ("gamma_M", Some(GradingParams { l_list: vec![2], k: 2 }), 1, vec![2, 2]),
        ("gamma_M", Some(GradingParams { l_list: vec![3], k: 1 }), 0, vec![3, 3]),
        ("albert_cartan", None, 4, vec![]),
        ("albert_z25", None, 0, vec![2, 2, 2, 2, 2]),
        ("albert_zz23", None, 1, vec![2, 2, 2]),
        ("albert_z33", None, 0, vec![3, 3, 3]),
    ];
    let mut pass = true;
    for (name, params, rank, moduli) in &expect {
        let g = builtin_grading(name, params.as_ref()).unwrap();
        let u = universal_abelian_group(&g).unwrap();
        let mut got = u.group.moduli.clone();
        got.sort();
        let mut want = moduli.clone();
        want.sort();
        pass &= u.group.free_rank == *rank && got == want;
    }
    record(10, "universal groups match the seven builtin gradings", pass);
}
