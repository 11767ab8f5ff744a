//! The five subcommands: theorem hypothesis checking, action verification,
//! prime-density searches, Sklyanin computations, and bicharacter invariants.
//! Every command emits a JSON document with a `schema_version` field;
//! `serde_json` keeps object keys sorted, so identical configs produce
//! byte-identical output.

use crate::config::Config;
use crate::parse::{
    collect_free_names, parse_algebra_element, parse_cyclotomic, parse_mult_element,
};
use hopfcheck_core::exactnum::{CycField, Cyclotomic};
use hopfcheck_core::field::{Field, RationalField};
use hopfcheck_core::hopfcore::{
    cyclic_group_algebra, describe_hopf_vector, inner_faithful, parse_structure_constants,
    s3_group_algebra, sweedler, sweedler_polynomial_action, sweedler_torus_action, ActionBackend,
    FinDimHopf, HopfAction,
};
use hopfcheck_core::qalg::{cyclotomic_algebra, QAlgebra, QElement, Variant};
use hopfcheck_core::redmodp::{coprime_to_factorial, prime_search, SearchMode};
use hopfcheck_core::sklyanin::{
    check_theorem_sklyanin, SigmaOrder, SklyaninAlgebra,
};
use hopfcheck_core::{Bicharacter, Error, Rational, Result};
use serde_json::{json, Value};
use std::sync::Arc;

pub const SCHEMA_VERSION: &str = "1";

/// Exit codes: 0 = computed (whatever the verdict), 2 = input error,
/// 3 = internal invariant violation.
pub fn classify_exit(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => 3,
        _ => 2,
    }
}

/// The target algebra of a config: kind, rank, and bicharacter with the free
/// generator names that appeared.
pub struct AlgebraSpec {
    pub kind: String,
    pub variant: Variant,
    pub bichar: Bicharacter,
    pub free_names: Vec<String>,
}

pub fn algebra_from_config(config: &Config, section: &str) -> Result<AlgebraSpec> {
    let kind = config.require(section, "kind")?.to_string();
    let variant = match kind.as_str() {
        "qpoly" => Variant::Polynomial,
        "qtorus" => Variant::Torus,
        other => {
            return Err(Error::Parse(format!(
                "unsupported algebra kind `{other}` here (expected qpoly or qtorus)"
            )))
        }
    };
    let n = config.require_usize(section, "n")?;
    if n < 1 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    let mut exprs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            exprs.push(config.require(section, &format!("q_{i}_{j}"))?);
        }
    }
    let free_names = collect_free_names(&exprs)?;
    let upper = exprs
        .iter()
        .map(|e| parse_mult_element(e, &free_names))
        .collect::<Result<Vec<_>>>()?;
    let bichar = Bicharacter::from_upper(n, free_names.clone(), upper)?;
    Ok(AlgebraSpec {
        kind,
        variant,
        bichar,
        free_names,
    })
}

fn rational_from_config(config: &Config, section: &str, key: &str) -> Result<Rational> {
    let raw = config.require(section, key)?;
    parse_cyclotomic(raw)?
        .as_rational()
        .ok_or_else(|| Error::Parse(format!("`{key}` must be rational")))
}

/// `check-theorem`: compute the hypothesis data for the named theorem and
/// report APPLIES or INCONCLUSIVE. A failed hypothesis never means the
/// conclusion is false, only that the theorem is silent.
pub fn cmd_check_theorem(config: &Config, bound: u64) -> Result<Value> {
    let theorem = config.require("", "theorem")?.to_string();
    let d = config
        .get_u64("", "d")?
        .ok_or_else(|| Error::Parse("missing key `d`".into()))?;
    let kind = config.require("algebra", "kind")?;

    if kind == "sklyanin" {
        if theorem != "thm-6.7" {
            return Err(Error::Parse(format!(
                "theorem {theorem} does not apply to a Sklyanin algebra config"
            )));
        }
        let a = rational_from_config(config, "algebra", "a")?;
        let b = rational_from_config(config, "algebra", "b")?;
        let c = rational_from_config(config, "algebra", "c")?;
        let bound = config.get_u64("algebra", "bound")?.unwrap_or(bound);
        let data = check_theorem_sklyanin(a, b, c, d, bound)?;
        let verdict = if data.applies { "APPLIES" } else { "INCONCLUSIVE" };
        let explanation = match &data.sigma {
            SigmaOrder::InfiniteCertified { primes, orders } => format!(
                "translation order certified infinite via reductions mod {} (order {}) and {} (order {})",
                primes.0, orders.0, primes.1, orders.1
            ),
            SigmaOrder::Finite(n) if data.applies => {
                format!("translation order {n} is coprime to {d}!")
            }
            SigmaOrder::Finite(n) => {
                format!("translation order {n} shares a prime factor with {d}!; the theorem is silent")
            }
            SigmaOrder::ExceedsBound => "translation order undecided within the bound".into(),
        };
        return Ok(json!({
            "schema_version": SCHEMA_VERSION,
            "theorem": theorem,
            "hypotheses": {
                "d": d,
                "sigma_order": sigma_json(&data.sigma),
                "pi_degree": data.pi_degree,
            },
            "verdict": verdict,
            "explanation": explanation,
        }));
    }

    let spec = algebra_from_config(config, "algebra")?;
    let ell = spec.bichar.component_group_order()?;
    let coprime = coprime_to_factorial(&ell, d)?;
    let (verdict, nondegenerate, explanation) = match theorem.as_str() {
        "thm-4.1" | "cor-4.2" => {
            let explanation = if coprime {
                format!("|G_q/G_q^0| = {ell} is coprime to {d}!")
            } else {
                format!("|G_q/G_q^0| = {ell} shares a prime factor with {d}!; the theorem is silent")
            };
            (coprime, None, explanation)
        }
        "thm-5.2" => {
            let nondeg = spec.bichar.is_nondegenerate()?;
            let explanation = match (coprime, nondeg) {
                (true, true) => format!(
                    "|G_q/G_q^0| = {ell} is coprime to {d}! and q is nondegenerate"
                ),
                (false, _) => format!(
                    "|G_q/G_q^0| = {ell} shares a prime factor with {d}!; the theorem is silent"
                ),
                (true, false) => format!(
                    "|G_q/G_q^0| = {ell} is coprime to {d}! but q is degenerate; the theorem is silent"
                ),
            };
            (coprime && nondeg, Some(nondeg), explanation)
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown theorem id `{other}` (expected thm-4.1, cor-4.2, thm-5.2, thm-6.7)"
            )))
        }
    };
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "theorem": theorem,
        "hypotheses": {
            "d": d,
            "ell": ell.to_string(),
            "ell_coprime_to_d_factorial": coprime,
            "nondegenerate": nondegenerate,
            "kind": spec.kind,
        },
        "verdict": if verdict { "APPLIES" } else { "INCONCLUSIVE" },
        "explanation": explanation,
    }))
}

fn sigma_json(sigma: &SigmaOrder) -> Value {
    match sigma {
        SigmaOrder::Finite(n) => json!({ "kind": "finite", "order": n }),
        SigmaOrder::InfiniteCertified { primes, orders } => json!({
            "kind": "infinite (certified)",
            "primes": [primes.0, primes.1],
            "orders": [orders.0, orders.1],
        }),
        SigmaOrder::ExceedsBound => json!({ "kind": "exceeds bound" }),
    }
}

/// Deterministic 64-bit mixer used for the seeded random spot checks.
fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn violations_json(report: &hopfcheck_core::hopfcore::ModuleAlgebraReport) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(|v| {
                json!({
                    "law": v.law,
                    "hopf_basis": v.hopf_basis,
                    "witness": v.witness,
                })
            })
            .collect(),
    )
}

fn action_report<F: Field>(
    action: &HopfAction<F>,
    max_degree: i64,
    seed: u64,
) -> Result<Value> {
    let axioms = action.hopf.verify_hopf_axioms();
    let semisimple = action.hopf.is_semisimple()?;
    let module = hopfcheck_core::hopfcore::verify_module_algebra(action, max_degree)?;
    let faithful = inner_faithful(action, max_degree)?;

    // seeded random Leibniz re-checks on two-term elements
    let mut state = seed;
    let algebra = &action.algebra;
    let ring = algebra.scalars();
    let hopf = &action.hopf;
    let f = &hopf.field;
    let monos = hopfcheck_core::hopfcore::monomials_up_to(algebra.as_ref(), max_degree / 2);
    let mut spot_passed = true;
    let samples = 8usize;
    for _ in 0..samples {
        let rand_elem = |state: &mut u64| -> Result<QElement<F>> {
            let mut e = QElement::zero(algebra);
            for _ in 0..2 {
                let exps = monos[(splitmix(state) % monos.len() as u64) as usize].clone();
                let c = ring.constant(f.from_i64((splitmix(state) % 7) as i64 - 3));
                e = e.add(&QElement::monomial(algebra, exps, c))?;
            }
            Ok(e)
        };
        let a = rand_elem(&mut state)?;
        let b = rand_elem(&mut state)?;
        let ab = a.mul(&b)?;
        for m in 0..hopf.dim {
            let direct = action.apply_basis(m, &ab)?;
            let mut expanded = QElement::zero(algebra);
            for x in 0..hopf.dim {
                for y in 0..hopf.dim {
                    let c = &hopf.comult[m][x][y];
                    if f.is_zero(c) {
                        continue;
                    }
                    let l = action.apply_basis(x, &a)?;
                    let r = action.apply_basis(y, &b)?;
                    expanded = expanded.add(&l.mul(&r)?.scale(&ring.constant(c.clone())))?;
                }
            }
            if direct != expanded {
                spot_passed = false;
            }
        }
    }

    Ok(json!({
        "hopf": {
            "dim": action.hopf.dim,
            "basis": action.hopf.labels,
            "axioms_passed": axioms.is_empty(),
            "axiom_violations": axioms
                .iter()
                .map(|v| json!({ "axiom": v.axiom, "witness": v.witness }))
                .collect::<Vec<_>>(),
            "semisimple": semisimple.semisimple,
            "counit_of_integral": format!("{}", semisimple.counit_of_integral),
        },
        "module_algebra": {
            "max_degree": max_degree,
            "passed": module.passed(),
            "violations": violations_json(&module),
        },
        "inner_faithful": {
            "faithful": faithful.faithful,
            "certified": faithful.certified,
            "annihilator_dims": faithful.ann_dims,
            "ideal_dim": faithful.ideal_dim,
            "ideal_basis": faithful
                .ideal_basis
                .iter()
                .map(|v| describe_hopf_vector(&action.hopf, v))
                .collect::<Vec<_>>(),
        },
        "leibniz_spot_checks": {
            "seed": seed,
            "samples": samples,
            "passed": spot_passed,
        },
    }))
}

/// Lift a rational Hopf algebra into the cyclotomic field so it can act on
/// cyclotomic-coefficient algebras.
fn lift_hopf(h: &FinDimHopf<RationalField>) -> FinDimHopf<CycField> {
    let lift = |r: &Rational| Cyclotomic::from_rational(r.clone());
    FinDimHopf::new(
        CycField,
        h.labels.clone(),
        h.mult
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(lift).collect()).collect())
            .collect(),
        h.unit.iter().map(lift).collect(),
        h.comult
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(lift).collect()).collect())
            .collect(),
        h.counit.iter().map(lift).collect(),
        h.antipode
            .iter()
            .map(|r| r.iter().map(lift).collect())
            .collect(),
    )
    .expect("lifting preserves shape")
}

fn hopf_from_name(name: &str) -> Result<FinDimHopf<CycField>> {
    if name == "sweedler" {
        return Ok(sweedler(CycField));
    }
    if let Some(rest) = name.strip_prefix("group:") {
        if rest == "S3" {
            return s3_group_algebra(CycField);
        }
        if let Some(n) = rest.strip_prefix("Z/") {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad cyclic group order in `{name}`")))?;
            return cyclic_group_algebra(CycField, n);
        }
        return Err(Error::Parse(format!(
            "unknown group `{rest}` (expected Z/n or S3)"
        )));
    }
    if let Some(path) = name.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read `{path}`: {e}")))?;
        return Ok(lift_hopf(&parse_structure_constants(&text)?));
    }
    Err(Error::Parse(format!(
        "unknown Hopf algebra `{name}` (expected sweedler, group:Z/n, group:S3, or @file)"
    )))
}

/// `verify-action`: Hopf axioms, module-algebra laws, and inner faithfulness
/// for a built-in or user-supplied action.
pub fn cmd_verify_action(config: &Config, max_degree: i64, seed: u64) -> Result<Value> {
    let action_name = config.require("", "action")?.to_string();
    let body = match action_name.as_str() {
        "sweedler-qpoly" => {
            let order = config.get_u64("", "order")?.unwrap_or(3);
            let action = sweedler_polynomial_action(order)?;
            action_report(&action, max_degree, seed)?
        }
        "sweedler-qtorus" => {
            let n = config.get_u64("", "n")?.unwrap_or(3) as usize;
            match sweedler_torus_action(n) {
                Ok(action) => action_report(&action, max_degree, seed)?,
                Err(Error::NoCentralOddElement) => {
                    // a computed outcome, not an input error
                    return Ok(json!({
                        "schema_version": SCHEMA_VERSION,
                        "action": action_name,
                        "outcome": "NoCentralOddElement",
                        "explanation": format!(
                            "the radical of the n = {n} sign bicharacter contains no odd-degree vector, so no Sweedler action of this shape exists"
                        ),
                    }));
                }
                Err(e) => return Err(e),
            }
        }
        "custom" => {
            let hopf = hopf_from_name(config.require("", "hopf")?)?;
            let spec = algebra_from_config(config, "algebra")?;
            let algebra = cyclotomic_algebra(spec.bichar, spec.variant)?;
            let images = parse_images(config, &hopf, &algebra, &spec.free_names)?;
            let action =
                HopfAction::new(hopf, algebra, ActionBackend::GeneratorImages { images })?;
            action_report(&action, max_degree, seed)?
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown action `{other}` (expected sweedler-qpoly, sweedler-qtorus, custom)"
            )))
        }
    };
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "action": action_name,
    });
    merge(&mut doc, body);
    Ok(doc)
}

fn merge(doc: &mut Value, body: Value) {
    if let (Value::Object(d), Value::Object(b)) = (doc, body) {
        for (k, v) in b {
            d.insert(k, v);
        }
    }
}

fn parse_images(
    config: &Config,
    hopf: &FinDimHopf<CycField>,
    algebra: &Arc<QAlgebra<CycField>>,
    free_names: &[String],
) -> Result<Vec<Vec<QElement<CycField>>>> {
    let section = config
        .section("images")
        .ok_or_else(|| Error::Parse("custom actions need an [images] section".into()))?;
    let mut images =
        vec![vec![None::<QElement<CycField>>; algebra.rank()]; hopf.dim];
    for (key, value) in section {
        let (label, gen) = key
            .rsplit_once('.')
            .ok_or_else(|| Error::Parse(format!("image key `{key}` should be `<basis>.<x_j>`")))?;
        let m = hopf
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Parse(format!("unknown basis element `{label}`")))?;
        let j: usize = gen
            .strip_prefix('x')
            .and_then(|s| s.parse().ok())
            .filter(|&j| j >= 1 && j <= algebra.rank())
            .ok_or_else(|| Error::Parse(format!("unknown generator `{gen}`")))?;
        images[m][j - 1] = Some(parse_algebra_element(value, algebra, free_names)?);
    }
    images
        .into_iter()
        .enumerate()
        .map(|(m, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, img)| {
                    img.ok_or_else(|| {
                        Error::Parse(format!(
                            "missing image `{}.x{}`",
                            hopf.labels[m],
                            j + 1
                        ))
                    })
                })
                .collect()
        })
        .collect()
}

pub struct PrimeSearchOptions {
    pub bound: u64,
    pub universal: bool,
    pub csv: bool,
}

/// `prime-search`: stream one line per (prime, character) reduction, then the
/// density estimate. CSV mode prints rows to stdout and the estimate to
/// stderr so the table stays machine-readable.
pub fn cmd_prime_search(
    config: &Config,
    opts: &PrimeSearchOptions,
    out: &mut dyn std::io::Write,
    err: &mut dyn std::io::Write,
) -> Result<()> {
    let r = config
        .get_u64("", "r")?
        .ok_or_else(|| Error::Parse("missing key `r`".into()))?;
    if r < 1 {
        return Err(Error::Parse("r must be at least 1".into()));
    }
    let bound = config.get_u64("", "bound")?.unwrap_or(opts.bound);
    let mode = if opts.universal {
        SearchMode::Universal
    } else {
        match config.get("", "mode") {
            None | Some("existential") => SearchMode::Existential,
            Some("universal") => SearchMode::Universal,
            Some(other) => {
                return Err(Error::Parse(format!(
                    "unknown mode `{other}` (expected existential or universal)"
                )))
            }
        }
    };
    let tuple_section = config
        .section("tuple")
        .ok_or_else(|| Error::Parse("missing [tuple] section".into()))?;
    if tuple_section.is_empty() {
        return Err(Error::Parse("the [tuple] section is empty".into()));
    }
    let exprs: Vec<&str> = tuple_section.iter().map(|(_, v)| v.as_str()).collect();
    let free_names = collect_free_names(&exprs)?;
    let g = exprs
        .iter()
        .map(|e| parse_mult_element(e, &free_names))
        .collect::<Result<Vec<_>>>()?;
    let mut values = vec![None; free_names.len()];
    if let Some(value_section) = config.section("values") {
        for (name, value) in value_section {
            let idx = free_names
                .iter()
                .position(|f| f == name)
                .ok_or_else(|| Error::Parse(format!("value for undeclared generator `{name}`")))?;
            values[idx] = Some(parse_cyclotomic(value)?);
        }
    }
    for (i, v) in values.iter().enumerate() {
        if v.is_none() {
            return Err(Error::UninstantiatedFreeGenerator(free_names[i].clone()));
        }
    }

    let outcome = prime_search(&g, &values, r, bound, mode)?;
    if opts.csv {
        writeln!(
            out,
            "p,character_index,residue_degree,tuple_order,coprime_to_r,entry_orders"
        )
        .ok();
        for rep in &outcome.reports {
            let orders = rep
                .entry_orders
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(";");
            writeln!(
                out,
                "{},{},{},{},{},{}",
                rep.p,
                rep.character_index,
                rep.residue_degree,
                rep.tuple_order,
                rep.coprime_to_r,
                orders
            )
            .ok();
        }
        writeln!(
            err,
            "{}",
            serde_json::to_string(&json!({
                "schema_version": SCHEMA_VERSION,
                "density_estimate": outcome.estimate,
            }))
            .unwrap()
        )
        .ok();
    } else {
        for rep in &outcome.reports {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "report": rep,
                }))
                .unwrap()
            )
            .ok();
        }
        writeln!(
            out,
            "{}",
            serde_json::to_string(&json!({
                "schema_version": SCHEMA_VERSION,
                "density_estimate": outcome.estimate,
                "good": outcome.good,
            }))
            .unwrap()
        )
        .ok();
    }
    Ok(())
}

/// Render a word index of the given degree as letters `x, y, z`.
fn word_string(degree: usize, mut idx: usize) -> String {
    let letters = ['x', 'y', 'z'];
    let mut out = vec!['?'; degree];
    for slot in out.iter_mut().rev() {
        *slot = letters[idx % 3];
        idx /= 3;
    }
    out.into_iter().collect()
}

/// `sklyanin`: Hilbert dimensions, the degree-3 center, the translation
/// order, and the coprimality verdict.
pub fn cmd_sklyanin(config: &Config, max_degree: i64, bound: u64) -> Result<Value> {
    let a = rational_from_config(config, "sklyanin", "a")?;
    let b = rational_from_config(config, "sklyanin", "b")?;
    let c = rational_from_config(config, "sklyanin", "c")?;
    let d = config.get_u64("sklyanin", "d")?.unwrap_or(2);
    let max_degree = config
        .get_u64("sklyanin", "max_degree")?
        .map(|v| v as i64)
        .unwrap_or(max_degree);
    if !(0..=6).contains(&max_degree) {
        return Err(Error::Parse(
            "max_degree must be between 0 and 6 (the span grows as 3^degree)".into(),
        ));
    }
    let bound = config.get_u64("sklyanin", "bound")?.unwrap_or(bound);

    let s = SklyaninAlgebra::new(RationalField, a.clone(), b.clone(), c.clone())?;
    let hilbert = s.hilbert(max_degree as usize);
    let reference: Vec<usize> = (0..=max_degree as usize)
        .map(|m| (m + 1) * (m + 2) / 2)
        .collect();
    let center = s.central_degree3()?;
    let center_basis: Vec<String> = center
        .basis
        .iter()
        .map(|t| {
            let parts: Vec<String> = t
                .iter()
                .enumerate()
                .filter(|(_, coeff)| !RationalField.is_zero(coeff))
                .map(|(w, coeff)| format!("({}) {}", coeff, word_string(3, w)))
                .collect();
            parts.join(" + ")
        })
        .collect();
    let data = check_theorem_sklyanin(a.clone(), b.clone(), c.clone(), d, bound)?;

    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "parameters": { "a": a.to_string(), "b": b.to_string(), "c": c.to_string() },
        "hilbert": {
            "dimensions": hilbert,
            "polynomial_ring_reference": reference,
        },
        "center_degree3": {
            "dimension": center.basis.len(),
            "solution_dim": center.solution_dim,
            "ideal_dim": center.ideal_dim,
            "basis": center_basis,
        },
        "sigma": sigma_json(&data.sigma),
        "theorem": {
            "id": "thm-6.7",
            "d": d,
            "verdict": if data.applies { "APPLIES" } else { "INCONCLUSIVE" },
            "pi_degree": data.pi_degree,
        },
    }))
}

/// `bichar`: the lattice invariants of a bicharacter: `l = |G_q/G_q^0|`,
/// radical basis, nondegeneracy, and the PI degree when all entries are
/// torsion.
pub fn cmd_bichar(config: &Config) -> Result<Value> {
    let spec = algebra_from_config(config, "algebra")?;
    let ell = spec.bichar.component_group_order()?;
    let radical = spec.bichar.radical()?;
    let nondegenerate = radical.is_empty();
    let pi = match spec.bichar.torsion_pi_degree() {
        Ok(pi) => json!({
            "degree": pi.degree.to_string(),
            "bound": pi.bound.to_string(),
            "radical_size_mod_n": pi.rad_size.to_string(),
            "order": pi.order,
        }),
        Err(Error::NotTorsion(which)) => json!({ "not_torsion": which }),
        Err(e) => return Err(e),
    };
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "kind": spec.kind,
        "n": spec.bichar.rank(),
        "free_generators": spec.free_names,
        "conductor": spec.bichar.conductor(),
        "component_group_order": ell.to_string(),
        "radical_basis": radical
            .iter()
            .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "nondegenerate": nondegenerate,
        "pi": pi,
    }))
}
