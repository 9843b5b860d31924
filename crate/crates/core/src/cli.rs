//! Command-line surface: build algebras and gradings, run the Weyl pipeline,
//! and verify the named check suites. Workspace layout is a plain directory
//! with algebras/, gradings/ and reports/ subdirectories of JSON files.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::abgroups::{AbElem, AbGroup};
use crate::algebras::{
    albert_algebra, algebra_from_table, cayley_cd_basis, cayley_cd_to_good, cayley_good_basis,
    matrix_algebra_mdk, nu_idx, nu_minus_idx, nu_plus_idx, okubo_algebra, pauli_matrix_algebra,
    AlgElement, AlgebraRef, StructAlgebra, NU_E, NU_ET, NU_SM, NU_SP,
};
use crate::gradings::{
    albert_cartan_grading, albert_z25_grading, albert_z33_grading, builtin_grading,
    okubo_z3_degrees, support, universal_abelian_group, GradingParams, GradingRef, grading_make,
};
use crate::morphisms::associativity_defect;
use crate::scalars::CycScalar;
use crate::weyl::{weyl_group, weyl_matrix_theorem_check, NamedCheck, Strategy, WeylReport};
use crate::{Error, Result};

#[derive(Parser)]
#[command(name = "weylgrad", about = "Fine gradings and their Weyl groups, verified exactly")]
struct Cli {
    /// workspace directory for JSON artifacts
    #[arg(long, default_value = ".", global = true)]
    workspace: PathBuf,
    /// cap on parallel workers
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an algebra or grading and persist it as JSON
    Build {
        /// "algebra" or "grading"
        kind: String,
        /// builtin name (e.g. cayley, okubo, albert_z25, gamma_M)
        name: String,
        /// orders of the cyclic factors for pauli / gamma_M
        #[arg(long, value_delimiter = ',')]
        l: Vec<i64>,
        /// matrix block count for gamma_M / mdk
        #[arg(long)]
        k: Option<usize>,
    },
    /// Compute the Weyl group of a builtin grading and write a report
    Weyl {
        grading: String,
        #[arg(long, default_value = "full")]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        l: Vec<i64>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run a named check suite and print one pass/fail line per check
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// strategy for the albert_z33 realizability filter
        #[arg(long, default_value = "sampled:200")]
        mode: String,
        /// print tab-separated name/result pairs instead of the table
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(Serialize)]
struct ErrorJson {
    error: String,
}

fn fail_json(e: &Error) -> i32 {
    println!("{}", serde_json::to_string(&ErrorJson { error: e.to_string() }).unwrap());
    match e {
        Error::BoundExceeded(_) => 2,
        _ => 1,
    }
}

pub fn run() -> i32 {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap prints its own usage/help text
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    if let Some(n) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let ws = Workspace { root: cli.workspace.clone() };
    let code = match &cli.cmd {
        Cmd::Build { kind, name, l, k } => cmd_build(&ws, kind, name, l, *k),
        Cmd::Weyl { grading, mode, out, l, k } => cmd_weyl(&ws, grading, mode, out.as_deref(), l, *k),
        Cmd::Verify { suite, mode, tsv } => cmd_verify(suite, mode, *tsv),
    };
    match code {
        Ok(c) => c,
        Err(e) => fail_json(&e),
    }
}

/// On-disk registry: one JSON file per named object.
pub struct Workspace {
    pub root: PathBuf,
}

impl Workspace {
    pub fn path_for(&self, kind: &str, name: &str) -> PathBuf {
        self.root.join(kind).join(format!("{}.json", name))
    }

    pub fn save<T: Serialize>(&self, kind: &str, name: &str, value: &T) -> Result<PathBuf> {
        let path = self.path_for(kind, name);
        std::fs::create_dir_all(path.parent().unwrap())?;
        let mut body = serde_json::to_string_pretty(value)?;
        body.push('\n');
        std::fs::write(&path, body)?;
        Ok(path)
    }

    pub fn load<T: for<'de> Deserialize<'de>>(&self, kind: &str, name: &str) -> Result<T> {
        let body = std::fs::read_to_string(self.path_for(kind, name))?;
        Ok(serde_json::from_str(&body)?)
    }
}

/// Serialized form of a grading: the structure-constant table together with
/// the grading group and the degree coordinates of each basis vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GradingDump {
    pub name: String,
    pub algebra: StructAlgebra,
    pub free_rank: usize,
    pub moduli: Vec<i64>,
    pub degree: Vec<Vec<i64>>,
}

pub fn dump_grading(g: &GradingRef) -> GradingDump {
    GradingDump {
        name: g.name.clone().unwrap_or_default(),
        algebra: (*g.algebra).clone(),
        free_rank: g.group.free_rank,
        moduli: g.group.moduli.clone(),
        degree: g.degree.iter().map(|d| d.coords.clone()).collect(),
    }
}

pub fn load_grading(d: &GradingDump) -> Result<GradingRef> {
    let algebra = algebra_from_table(d.algebra.clone())?;
    let group = AbGroup::new(d.free_rank, d.moduli.clone());
    let degree: Vec<AbElem> = d.degree.iter().map(|c| group.elem(c.clone())).collect();
    grading_make(&algebra, &group, degree, Some(d.name.clone()))
}

fn builtin_algebra(name: &str, l: &[i64], k: Option<usize>) -> Result<AlgebraRef> {
    match name {
        "cayley" => cayley_good_basis(),
        "cayley_cd" => cayley_cd_basis(),
        "okubo" => okubo_algebra(),
        "albert" => albert_algebra(&cayley_good_basis()?).map(|a| a.algebra),
        "pauli" => {
            if l.is_empty() {
                return Err(Error::invalid("pauli requires --l"));
            }
            pauli_matrix_algebra(l).map(|p| p.algebra)
        }
        "mdk" => {
            let k = k.ok_or_else(|| Error::invalid("mdk requires --k"))?;
            matrix_algebra_mdk(l, k).map(|m| m.algebra)
        }
        _ => Err(Error::invalid(format!("unknown algebra name: {}", name))),
    }
}

fn grading_params(l: &[i64], k: Option<usize>) -> Option<GradingParams> {
    if l.is_empty() && k.is_none() {
        None
    } else {
        Some(GradingParams { l_list: l.to_vec(), k: k.unwrap_or(1) })
    }
}

fn cmd_build(ws: &Workspace, kind: &str, name: &str, l: &[i64], k: Option<usize>) -> Result<i32> {
    match kind {
        "algebra" => {
            let a = builtin_algebra(name, l, k)?;
            let path = ws.save("algebras", name, &*a)?;
            println!("wrote {} ({} basis elements)", path.display(), a.dim());
        }
        "grading" => {
            let params = grading_params(l, k);
            let g = builtin_grading(name, params.as_ref())?;
            let dump = dump_grading(&g);
            // round-trip sanity: the stored form reconstructs the grading
            let back = load_grading(&dump)?;
            if dump_grading(&back) != dump {
                return Err(Error::invalid("grading does not round-trip through JSON"));
            }
            let path = ws.save("gradings", name, &dump)?;
            println!(
                "wrote {} (group Z^{} x {:?}, {} components)",
                path.display(),
                dump.free_rank,
                dump.moduli,
                support(&g).entries.len()
            );
        }
        _ => return Err(Error::invalid(format!("unknown kind: {}", kind))),
    }
    Ok(0)
}

fn cmd_weyl(
    ws: &Workspace,
    grading: &str,
    mode: &str,
    out: Option<&Path>,
    l: &[i64],
    k: Option<usize>,
) -> Result<i32> {
    let strategy = Strategy::parse(mode)?;
    let params = grading_params(l, k);
    let report = weyl_group(grading, params.as_ref(), strategy)?;
    let path = match out {
        Some(p) => {
            if let Some(parent) = p.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            let mut body = serde_json::to_string_pretty(&report)?;
            body.push('\n');
            std::fs::write(p, body)?;
            p.to_path_buf()
        }
        None => ws.save("reports", grading, &report)?,
    };
    println!(
        "{}: lower {} upper {} matched {} -> {}",
        report.grading,
        report.lower_order,
        report.upper_order,
        report.matched,
        path.display()
    );
    for c in &report.structure_checks {
        println!("  {}: {}", c.name, if c.pass { "pass" } else { "fail" });
    }
    Ok(if report.all_checks_pass() { 0 } else { 1 })
}

fn cmd_verify(suite: &str, mode: &str, tsv: bool) -> Result<i32> {
    let strategy = Strategy::parse(mode)?;
    let checks = verify_suite(suite, strategy)?;
    let mut first_fail: Option<&str> = None;
    for c in &checks {
        if tsv {
            println!("{}\t{}", c.name, if c.pass { "pass" } else { "fail" });
        } else {
            println!("{}: {}", c.name, if c.pass { "pass" } else { "fail" });
        }
        if !c.pass && first_fail.is_none() {
            first_fail = Some(&c.name);
        }
    }
    if let Some(name) = first_fail {
        println!("FAILED: {}", name);
        Ok(1)
    } else {
        println!("{} checks passed", checks.len());
        Ok(0)
    }
}

/// Runs a named check suite; prerequisites are built on demand in memory.
pub fn verify_suite(suite: &str, strategy: Strategy) -> Result<Vec<NamedCheck>> {
    let mut checks = Vec::new();
    match suite {
        "algebras" => checks_algebras(&mut checks)?,
        "gradings" => checks_gradings(&mut checks)?,
        "weyl" => checks_weyl(&mut checks, strategy)?,
        "all" => {
            checks_algebras(&mut checks)?;
            checks_gradings(&mut checks)?;
            checks_weyl(&mut checks, strategy)?;
        }
        _ => return Err(Error::invalid(format!("unknown suite: {}", suite))),
    }
    Ok(checks)
}

fn push(checks: &mut Vec<NamedCheck>, name: &str, pass: bool) {
    checks.push(NamedCheck { name: name.to_string(), pass });
}

/// Deterministic small-integer pseudorandom stream for exact sampling.
struct Lcg(u64);

impl Lcg {
    fn next_small(&mut self) -> i64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((self.0 >> 33) % 7) as i64 - 3
    }
}

fn random_element(a: &AlgebraRef, rng: &mut Lcg) -> AlgElement {
    AlgElement {
        algebra: a.clone(),
        coords: (0..a.dim()).map(|_| CycScalar::from_int(a.conductor, rng.next_small())).collect(),
    }
}

fn checks_algebras(checks: &mut Vec<NamedCheck>) -> Result<()> {
    let good = cayley_good_basis()?;
    let cd = cayley_cd_basis()?;
    let n = good.conductor;

    // the good-basis table agrees with the Cayley-Dickson construction via
    // the verified change of basis, so the published table is a Cayley algebra
    let fig1 = match cayley_cd_to_good(&cd, &good) {
        Ok(b) => {
            let map = |x: &AlgElement| AlgElement { algebra: good.clone(), coords: b.apply(&x.coords) };
            (0..8).all(|i| {
                (0..8).all(|j| {
                    let (x, y) = (AlgElement::basis(&cd, i), AlgElement::basis(&cd, j));
                    map(&x.mul(&y)) == map(&x).mul(&map(&y))
                })
            }) && map(&AlgElement::one(&cd)) == AlgElement::one(&good)
        }
        Err(_) => false,
    };
    push(checks, "cayley-table-matches-figure-1", fig1);

    let mut rng = Lcg(7);
    let comp = (0..50).all(|_| {
        let x = random_element(&good, &mut rng);
        let y = random_element(&good, &mut rng);
        x.mul(&y).norm() == &x.norm() * &y.norm()
    });
    push(checks, "cayley-composition-law", comp);

    let alt = (0..8).all(|i| {
        (0..8).all(|j| {
            let (x, y) = (AlgElement::basis(&good, i), AlgElement::basis(&good, j));
            x.mul(&x.mul(&y)) == x.mul(&x).mul(&y) && y.mul(&x).mul(&x) == y.mul(&x.mul(&x))
        })
    });
    push(checks, "cayley-alternative-law", alt);

    // okubo_algebra compares the formula product entry-by-entry with the
    // published table and fails construction on any mismatch
    let okubo = okubo_algebra();
    push(checks, "okubo-table-matches-figure-2", okubo.is_ok());
    if let Ok(o) = &okubo {
        let sym = (0..8).all(|i| {
            (0..8).all(|j| {
                (0..8).all(|k| {
                    let x = AlgElement::basis(o, i);
                    let y = AlgElement::basis(o, j);
                    let z = AlgElement::basis(o, k);
                    x.mul(&y).polar(&z) == x.polar(&y.mul(&z))
                })
            })
        });
        push(checks, "okubo-symmetric-composition", sym);
    } else {
        push(checks, "okubo-symmetric-composition", false);
    }

    // Albert product rules over every basis pair of the Cayley algebra
    let albert = albert_algebra(&good)?;
    let two = CycScalar::from_int(n, 2);
    let mut eq12 = true;
    for i in 1..=3usize {
        let ip1 = i % 3 + 1;
        let ip2 = ip1 % 3 + 1;
        for bi in 0..8 {
            let a = AlgElement::basis(&good, bi);
            let ia = albert.iota(i, &a);
            eq12 &= albert.e(i).mul(&ia).is_zero();
            eq12 &= albert.e(ip1).mul(&ia).scale(&two) == ia;
            eq12 &= albert.e(ip2).mul(&ia).scale(&two) == ia;
            for bj in 0..8 {
                let b = AlgElement::basis(&good, bj);
                let conj_prod =
                    crate::algebras::conjugate(&a)?.mul(&crate::algebras::conjugate(&b)?);
                eq12 &= ia.mul(&albert.iota(ip1, &b)) == albert.iota(ip2, &conj_prod);
                let scalar = &two * &a.polar(&b);
                eq12 &= ia.mul(&albert.iota(i, &b))
                    == albert.e(ip1).add(&albert.e(ip2)).scale(&scalar);
            }
        }
    }
    push(checks, "eq12-albert-product-rules", eq12);

    push(checks, "nu-basis-product-block", nu_block_check()?);

    // commutation relations X_s X_t = beta(s, t) X_t X_s in the twisted
    // group algebras
    let mut eq7 = true;
    for l_list in [vec![2], vec![3], vec![2, 2]] {
        let p = pauli_matrix_algebra(&l_list)?;
        for s in p.t.elements() {
            for t in p.t.elements() {
                let xs = AlgElement::basis(&p.algebra, p.index_of(&s));
                let xt = AlgElement::basis(&p.algebra, p.index_of(&t));
                eq7 &= xs.mul(&xt) == xt.mul(&xs).scale(&p.beta.value(&s, &t));
            }
        }
    }
    push(checks, "eq7-commutation-relations", eq7);

    push(checks, "albert-trace-orthogonality", trace_orthogonality_check()?);
    Ok(())
}

/// The nu-basis products of the Z x Z_2^3 presentation, checked exhaustively
/// over the spanning set: E, E~, S^+-, nu(a_j), nu_+-(w_b).
fn nu_block_check() -> Result<bool> {
    let cd = cayley_cd_basis()?;
    let albert = albert_algebra(&cd)?;
    let nu = crate::algebras::albert_nu_basis(albert)?;
    let a = &nu.algebra;
    let n = a.conductor;
    let two = CycScalar::from_int(n, 2);
    let e = AlgElement::basis(a, NU_E);
    let et = AlgElement::basis(a, NU_ET);
    let sp = AlgElement::basis(a, NU_SP);
    let sm = AlgElement::basis(a, NU_SM);
    // linear embeddings of C_0 (trace-zero words w_1..w_7) and C (all words)
    let nu_of = |x: &AlgElement| {
        let mut out = AlgElement::zero(a);
        for j in 1..8 {
            out = out.add(&AlgElement::basis(a, nu_idx(j)).scale(&x.coords[j]));
        }
        out
    };
    let nup_of = |x: &AlgElement| {
        let mut out = AlgElement::zero(a);
        for b in 0..8 {
            out = out.add(&AlgElement::basis(a, nu_plus_idx(b)).scale(&x.coords[b]));
        }
        out
    };
    let num_of = |x: &AlgElement| {
        let mut out = AlgElement::zero(a);
        for b in 0..8 {
            out = out.add(&AlgElement::basis(a, nu_minus_idx(b)).scale(&x.coords[b]));
        }
        out
    };
    let mut ok = e.mul(&et).is_zero()
        && e.mul(&sp).is_zero()
        && e.mul(&sm).is_zero()
        && et.mul(&sp) == sp
        && et.mul(&sm) == sm
        && sp.mul(&sm) == et.scale(&two);
    for j in 1..8usize {
        let aj = AlgElement::basis(&cd, j);
        let na = nu_of(&aj);
        ok &= e.mul(&na).is_zero() && et.mul(&na) == na;
        ok &= sp.mul(&na).is_zero() && sm.mul(&na).is_zero();
        for jj in 1..8usize {
            let b = AlgElement::basis(&cd, jj);
            // nu(a) nu(b) = -2 n(a, b) E~
            ok &= nu_of(&aj).mul(&nu_of(&b)) == et.scale(&-&(&two * &aj.polar(&b)));
        }
        for bb in 0..8usize {
            let x = AlgElement::basis(&cd, bb);
            // nu(a) nu_+-(x) = +- nu_+-(x a)
            ok &= na.mul(&nup_of(&x)) == nup_of(&x.mul(&aj));
            ok &= na.mul(&num_of(&x)) == num_of(&x.mul(&aj)).neg();
        }
    }
    for bx in 0..8usize {
        let x = AlgElement::basis(&cd, bx);
        let (px, mx) = (nup_of(&x), num_of(&x));
        ok &= e.mul(&px).scale(&two) == px && et.mul(&px).scale(&two) == px;
        ok &= e.mul(&mx).scale(&two) == mx && et.mul(&mx).scale(&two) == mx;
        ok &= sp.mul(&mx) == px && sm.mul(&px) == mx;
        ok &= sp.mul(&px).is_zero() && sm.mul(&mx).is_zero();
        for by in 0..8usize {
            let y = AlgElement::basis(&cd, by);
            let nxy = &two * &x.polar(&y);
            ok &= px.mul(&nup_of(&y)) == sp.scale(&nxy);
            ok &= mx.mul(&num_of(&y)) == sm.scale(&nxy);
            // nu_+(x) nu_-(y) = 2 n(x,y)(2E + E~) + nu(conj(y) x - conj(x) y),
            // the cross terms i iota_3(conj x) iota_2(y) - i iota_2(x) iota_3(conj y)
            // of the defining expressions
            let comm = crate::algebras::conjugate(&y)?
                .mul(&x)
                .sub(&crate::algebras::conjugate(&x)?.mul(&y));
            let rhs = e.scale(&two).add(&et).scale(&nxy).add(&nu_of(&comm));
            ok &= px.mul(&num_of(&y)) == rhs;
        }
    }
    Ok(ok)
}

/// T(A_g A_h) = 0 whenever g + h != 0, for the Albert Cartan and Z_2^5
/// gradings (the trace form is the sum of the frame coordinates in the
/// iota basis).
fn trace_orthogonality_check() -> Result<bool> {
    let mut ok = true;
    for g in [albert_cartan_grading()?.0, albert_z25_grading()?.0] {
        let table = support(&g);
        let trace = |x: &AlgElement| -> CycScalar {
            let mut t = x.coords[0].clone();
            t = &t + &x.coords[1];
            &t + &x.coords[2]
        };
        for s in &table.entries {
            for t in &table.entries {
                if s.degree.add(&t.degree).is_zero() {
                    continue;
                }
                for &b1 in &s.basis {
                    for &b2 in &t.basis {
                        let prod = AlgElement::basis(&g.algebra, b1)
                            .mul(&AlgElement::basis(&g.algebra, b2));
                        ok &= trace(&prod).is_zero();
                    }
                }
            }
        }
    }
    Ok(ok)
}

fn checks_gradings(checks: &mut Vec<NamedCheck>) -> Result<()> {
    // universal groups of the builtin gradings
    let expect: [(&str, Option<GradingParams>, usize, Vec<i64>); 9] = [
        ("cartan_cayley", None, 2, vec![]),
        ("cd_cayley", None, 0, vec![2, 2, 2]),
        ("gamma_M", Some(GradingParams { l_list: vec![2], k: 2 }), 1, vec![2, 2]),
        ("gamma_M", Some(GradingParams { l_list: vec![3], k: 1 }), 0, vec![3, 3]),
        ("albert_cartan", None, 4, vec![]),
        ("albert_z25", None, 0, vec![2, 2, 2, 2, 2]),
        ("albert_zz23", None, 1, vec![2, 2, 2]),
        ("albert_z33", None, 0, vec![3, 3, 3]),
        ("gamma_M", Some(GradingParams { l_list: vec![2], k: 3 }), 2, vec![2, 2]),
    ];
    let mut all = true;
    for (name, params, rank, moduli) in &expect {
        let g = builtin_grading(name, params.as_ref())?;
        let u = universal_abelian_group(&g)?;
        let mut got = u.group.moduli.clone();
        got.sort();
        let mut want = moduli.clone();
        want.sort();
        all &= u.group.free_rank == *rank && got == want;
    }
    push(checks, "universal-groups-match", all);

    // the Okubo Z_3^2 degrees really grade the Okubo algebra
    let okubo = okubo_algebra()?;
    let z32 = AbGroup::new(0, vec![3, 3]);
    let degrees: Vec<AbElem> =
        okubo_z3_degrees()?.iter().map(|d| z32.elem(d.to_vec())).collect();
    push(
        checks,
        "okubo-z32-grading-valid",
        grading_make(&okubo, &z32, degrees, Some("okubo_z32".into())).is_ok(),
    );

    // the associativity defect separates the two Z_3^3 gradings
    let data = albert_z33_grading()?;
    let a = &data.grading.algebra;
    let x1 = AlgElement::basis(a, 3);
    let x2 = AlgElement::basis(a, 9);
    let x3 = AlgElement::basis(a, 1);
    let w = CycScalar::root_of_unity(3, 1).embed(a.conductor);
    let dp = associativity_defect(&x1, &x2, &x3);
    let dm = associativity_defect(&x2, &x1, &x3);
    let distinguishes = match (dp, dm) {
        (Some(dp), Some(dm)) => {
            dp != dm && (dp == w || dp == w.pow(2).unwrap()) && &dp * &dm == CycScalar::one(a.conductor)
        }
        _ => false,
    };
    push(checks, "z33-defect-distinguishes-gradings", distinguishes);

    // support sizes are stable and components are disjoint by construction;
    // spot-check that every builtin grading builds and sorts canonically
    let mut sorted = true;
    for name in crate::gradings::BUILTIN_NAMES {
        let params = (name == "gamma_M").then(|| GradingParams { l_list: vec![2], k: 2 });
        let g = builtin_grading(name, params.as_ref())?;
        let table = support(&g);
        sorted &= table
            .entries
            .windows(2)
            .all(|w| w[0].degree.coords < w[1].degree.coords);
        let covered: HashSet<usize> =
            table.entries.iter().flat_map(|e| e.basis.iter().copied()).collect();
        sorted &= covered.len() == g.algebra.dim();
    }
    push(checks, "supports-sorted-and-partition", sorted);
    Ok(())
}

fn checks_weyl(checks: &mut Vec<NamedCheck>, strategy: Strategy) -> Result<()> {
    let mut run = |name: &str, report: Result<WeylReport>| match report {
        Ok(r) => {
            push(checks, &format!("weyl-{}-matched", name), r.matched);
            for c in &r.structure_checks {
                push(checks, &format!("{}/{}", name, c.name), c.pass);
            }
            Ok(())
        }
        Err(e) => Err(e),
    };
    run("cartan_cayley", weyl_group("cartan_cayley", None, strategy))?;
    run("cd_cayley", weyl_group("cd_cayley", None, strategy))?;
    run("gamma_M-2-2", weyl_matrix_theorem_check(&[2], 2))?;
    run("gamma_M-3-1", weyl_matrix_theorem_check(&[3], 1))?;
    run("gamma_M-2-3", weyl_matrix_theorem_check(&[2], 3))?;
    run("albert_cartan", weyl_group("albert_cartan", None, strategy))?;
    run("albert_z25", weyl_group("albert_z25", None, strategy))?;
    run("albert_zz23", weyl_group("albert_zz23", None, strategy))?;
    run("albert_z33", weyl_group("albert_z33", None, strategy))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_suite_passes() {
        let checks = verify_suite("algebras", Strategy::Full).unwrap();
        assert!(checks.iter().any(|c| c.name == "okubo-table-matches-figure-2"));
        for c in &checks {
            assert!(c.pass, "check failed: {}", c.name);
        }
    }

    #[test]
    fn gradings_suite_passes() {
        for c in verify_suite("gradings", Strategy::Full).unwrap() {
            assert!(c.pass, "check failed: {}", c.name);
        }
    }

    #[test]
    fn grading_json_roundtrip() {
        for (name, params) in [
            ("cartan_cayley", None),
            ("cd_cayley", None),
            ("gamma_M", Some(GradingParams { l_list: vec![2], k: 2 })),
        ] {
            let g = builtin_grading(name, params.as_ref()).unwrap();
            let dump = dump_grading(&g);
            let s = serde_json::to_string(&dump).unwrap();
            let back: GradingDump = serde_json::from_str(&s).unwrap();
            assert_eq!(back, dump);
            let g2 = load_grading(&back).unwrap();
            assert_eq!(dump_grading(&g2), dump);
        }
    }

    #[test]
    fn build_and_weyl_commands() {
        let dir = std::env::temp_dir().join("weylgrad-cli-test");
        let _ = std::fs::remove_dir_all(&dir);
        let ws = dir.to_str().unwrap();
        assert_eq!(
            run_from(["weylgrad", "--workspace", ws, "build", "algebra", "cayley"]),
            0
        );
        let a: StructAlgebra =
            Workspace { root: dir.clone() }.load("algebras", "cayley").unwrap();
        assert_eq!(a.labels.len(), 8);
        assert_eq!(
            run_from(["weylgrad", "--workspace", ws, "build", "grading", "albert_z25"]),
            0
        );
        let d: GradingDump = Workspace { root: dir.clone() }.load("gradings", "albert_z25").unwrap();
        assert_eq!((d.free_rank, d.moduli.len()), (0, 5));
        assert_eq!(
            run_from(["weylgrad", "--workspace", ws, "weyl", "cartan_cayley"]),
            0
        );
        let r: WeylReport = Workspace { root: dir.clone() }.load("reports", "cartan_cayley").unwrap();
        assert_eq!((r.lower_order, r.upper_order), (12, 12));
        // unknown grading: logical failure
        assert_eq!(run_from(["weylgrad", "--workspace", ws, "weyl", "nonexistent"]), 1);
        // determinism: rebuilding produces byte-identical grading files
        let p = Workspace { root: dir.clone() }.path_for("gradings", "albert_z25");
        let before = std::fs::read(&p).unwrap();
        assert_eq!(
            run_from(["weylgrad", "--workspace", ws, "build", "grading", "albert_z25"]),
            0
        );
        assert_eq!(std::fs::read(&p).unwrap(), before);
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn build_pauli_with_params() {
        let dir = std::env::temp_dir().join("weylgrad-cli-test-pauli");
        let _ = std::fs::remove_dir_all(&dir);
        let ws = dir.to_str().unwrap();
        assert_eq!(
            run_from(["weylgrad", "--workspace", ws, "build", "algebra", "pauli", "--l", "2,2"]),
            0
        );
        let a: StructAlgebra =
            Workspace { root: dir.clone() }.load("algebras", "pauli").unwrap();
        assert_eq!(a.labels.len(), 16);
        // validation failure: nonzero exit
        assert_ne!(
            run_from(["weylgrad", "--workspace", ws, "build", "algebra", "pauli"]),
            0
        );
        let _ = std::fs::remove_dir_all(&dir);
    }
}
