use std::fmt::Write as _;
use std::str::FromStr;

use horncodes::codes::{
    collineation_invariance_check, configuration_orbits, evaluation_code, grassmann_code_params, grassmann_orbit,
    is_k_arc, linalg, max_collinear, min_distance, nrc_points, omega_closure, psi_closure, rational_map_code,
    riemann_roch_basis, three_point_code, veronese_map, Divisor, LinearCode, Permutation, ProjectivePoint, TupleMode,
};
use horncodes::combinatorics::{conjugate, partition_from_index_set, partitions_of, q_binomial, IndexSet, Partition};
use horncodes::field::{
    euclid_quotients, horn_instance, local_degree, quotient_matrix, smith_normal_form, Field, FieldElement, P1Point,
    Poly, PolyMatrix, RationalFunction,
};
use horncodes::horn::{format_triples, horn_lr_consistency, t_set, u_set, IndexTriple};
use horncodes::symmetric::{
    character_value, coefficient_matrix_slice, kronecker_coefficient, lr_coefficient, lr_support,
    matrix_product_experiment, schur_polynomial, CoefficientKind, CycleType,
};
use horncodes::verify::{run_suite, Suite};
use serde_json::{json, Value};

use crate::{Cli, CodeCmd, Command, FieldCmd, HornCmd, Outcome, PartitionCmd, SliceKind};

/// An input or usage error; the process exits with status 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl From<horncodes::Error> for CliError {
    fn from(e: horncodes::Error) -> Self {
        Self(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn need_field(cli: &Cli) -> Result<Field> {
    let spec = cli
        .field
        .as_deref()
        .ok_or_else(|| CliError("this command needs --field (for example --field 5 or --field 2^3)".into()))?;
    Ok(Field::from_str(spec)?)
}

fn partition(s: &str) -> Result<Partition> {
    Ok(s.parse()?)
}

/// Splits on `sep` outside brackets, so element texts like `{1,2}` stay whole.
fn split_top(s: &str, sep: impl Fn(char) -> bool) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '{' | '(' | '[' => depth += 1,
            '}' | ')' | ']' => depth -= 1,
            _ if depth == 0 && sep(c) => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out.into_iter().map(str::trim).filter(|t| !t.is_empty()).collect()
}

fn p1_points(field: &Field, s: &str) -> Result<Vec<P1Point>> {
    split_top(s, |c| c == ',' || c.is_whitespace()).into_iter().map(|t| Ok(P1Point::parse(field, t)?)).collect()
}

fn index_list(s: &str) -> Result<std::collections::BTreeSet<usize>> {
    let body = s.trim().trim_start_matches('{').trim_end_matches('}');
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError(format!("bad index {t:?} in {s:?}"))))
        .collect()
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn int_table(order: &[Partition], rows: &[Vec<i64>]) -> String {
    let labels = strings(order);
    let width = labels.iter().map(String::len).chain(rows.iter().flatten().map(|x| x.to_string().len())).max().unwrap_or(1);
    let mut out = format!("{:>width$} |", "");
    for l in &labels {
        let _ = write!(out, " {l:>width$}");
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(rows) {
        let _ = write!(out, "{l:>width$} |");
        for x in row {
            let _ = write!(out, " {x:>width$}");
        }
        out.push('\n');
    }
    out
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Partition(cmd) => partition_cmd(cmd),
        Command::Qbinom { n, r, q } => {
            let count = q_binomial(*n, *r, *q)?;
            Ok(Outcome::new(json!({"n": n, "r": r, "q": q, "count": count.to_string()}), count.to_string()))
        }
        Command::Schur { lambda, vars } => {
            let lambda = partition(lambda)?;
            let s = schur_polynomial(&lambda, *vars);
            Ok(Outcome::new(
                json!({"lambda": lambda.to_string(), "vars": vars, "polynomial": s.to_string()}),
                s.to_string(),
            ))
        }
        Command::Lr(t) => {
            let (l, m, n) = (partition(&t.lambda)?, partition(&t.mu)?, partition(&t.nu)?);
            let c = lr_coefficient(&l, &m, &n);
            Ok(Outcome::new(
                json!({"lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string(), "coefficient": c}),
                c.to_string(),
            ))
        }
        Command::Kron(t) => {
            let (l, m, n) = (partition(&t.lambda)?, partition(&t.mu)?, partition(&t.nu)?);
            let k = kronecker_coefficient(&l, &m, &n)?;
            Ok(Outcome::new(
                json!({"lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string(), "coefficient": k}),
                k.to_string(),
            ))
        }
        Command::Character { lambda, rho } => {
            let (l, r) = (partition(lambda)?, partition(rho)?);
            let v = character_value(&l, &CycleType::new(r.clone()))?;
            Ok(Outcome::new(json!({"lambda": l.to_string(), "rho": r.to_string(), "value": v}), v.to_string()))
        }
        Command::KronMatrix { nu, kind } => {
            let nu = partition(nu)?;
            let kind = match kind {
                SliceKind::Kronecker => CoefficientKind::Kronecker,
                SliceKind::Lr => CoefficientKind::LittlewoodRichardson,
            };
            let slice = coefficient_matrix_slice(&nu, kind);
            Ok(Outcome::new(
                json!({"nu": nu.to_string(), "kind": kind, "order": strings(&slice.order), "entries": slice.entries}),
                int_table(&slice.order, &slice.entries),
            ))
        }
        Command::Experiment { nu } => {
            let nu = partition(nu)?;
            let report = matrix_product_experiment(&nu);
            let mut text = String::new();
            let mut conventions = Vec::new();
            for c in &report.conventions {
                let name = serde_json::to_value(c.convention).unwrap_or(Value::Null);
                let _ = writeln!(text, "convention {}: identity: {}", name.as_str().unwrap_or("?"), if c.is_identity { "yes" } else { "no" });
                let _ = writeln!(text, "{}", c.note);
                text.push_str(&int_table(&c.order, &c.product));
                conventions.push(json!({
                    "convention": name,
                    "order": strings(&c.order),
                    "lr": c.lr,
                    "kronecker": c.kronecker,
                    "product": c.product,
                    "is_identity": c.is_identity,
                    "lr_is_zero": c.lr_is_zero,
                    "note": c.note,
                }));
            }
            Ok(Outcome::new(json!({"nu": nu.to_string(), "conventions": conventions}), text))
        }
        Command::LrSupport { n } => {
            let support = lr_support(*n);
            let rows: Vec<Value> = support
                .iter()
                .map(|t| json!({"lambda": t.lambda.to_string(), "mu": t.mu.to_string(), "nu": t.nu.to_string(), "coefficient": t.coefficient}))
                .collect();
            let text = lines(support.iter().map(|t| format!("{} {} {} {}", t.lambda, t.mu, t.nu, t.coefficient)));
            Ok(Outcome::new(json!({"n": n, "count": support.len(), "triples": rows}), text))
        }
        Command::Horn(cmd) => horn_cmd(cmd),
        Command::Field(cmd) => field_cmd(&need_field(cli)?, cmd),
        Command::Euclid { f, g } => {
            let field = need_field(cli)?;
            let (f, g) = (Poly::parse(&field, f)?, Poly::parse(&field, g)?);
            let q = euclid_quotients(&f, &g)?;
            Ok(Outcome::new(
                json!({"field": field.to_string(), "f": f.to_string(), "g": g.to_string(), "quotients": strings(&q)}),
                lines(&q),
            ))
        }
        Command::Qmatrix { phi } => {
            let field = need_field(cli)?;
            let phi = RationalFunction::parse(&field, phi)?;
            let m = quotient_matrix(&phi)?;
            Ok(Outcome::new(json!({"phi": phi.to_string(), "matrix": m}), m.to_text()))
        }
        Command::Snf { matrix } => {
            let field = need_field(cli)?;
            let a = PolyMatrix::parse(&field, matrix)?;
            let snf = smith_normal_form(&a);
            let d = snf.diagonal_matrix();
            let holds = snf.left.mul(&a).and_then(|ua| ua.mul(&snf.right)).is_ok_and(|p| p == d);
            let text = format!(
                "factors: {}\nU:\n{}\nV:\n{}\n",
                strings(&snf.factors).join(", "),
                snf.left.to_text(),
                snf.right.to_text()
            );
            let mut out = Outcome::new(
                json!({"field": field.to_string(), "factors": strings(&snf.factors), "left": snf.left, "right": snf.right}),
                text,
            );
            if !holds {
                out.failure = Some("U·A·V does not equal the diagonal form".into());
            }
            Ok(out)
        }
        Command::HornInstance { a, b } => {
            let field = need_field(cli)?;
            let h = horn_instance(&PolyMatrix::parse(&field, a)?, &PolyMatrix::parse(&field, b)?)?;
            let c = lr_coefficient(&h.alpha, &h.beta, &h.gamma);
            Ok(Outcome::new(
                json!({
                    "alpha": h.alpha.to_string(),
                    "beta": h.beta.to_string(),
                    "gamma": h.gamma.to_string(),
                    "product": h.product,
                    "lr_coefficient": c,
                }),
                format!("alpha: {}\nbeta: {}\ngamma: {}\nlr: {c}\n", h.alpha, h.beta, h.gamma),
            ))
        }
        Command::LocalDegree { phi, at } => {
            let field = need_field(cli)?;
            let phi = RationalFunction::parse(&field, phi)?;
            let at = P1Point::parse(&field, at)?;
            let m = local_degree(&phi, at)?;
            Ok(Outcome::new(
                json!({"phi": phi.to_string(), "at": at.format(&field), "local_degree": m, "degree": phi.degree()}),
                m.to_string(),
            ))
        }
        Command::Nrc { n } => {
            let field = need_field(cli)?;
            let pts = nrc_points(&field, *n)?;
            Ok(Outcome::new(json!({"n": n, "q": field.order(), "points": strings(&pts)}), lines(&pts)))
        }
        Command::Veronese { point, degree } => {
            let field = need_field(cli)?;
            let p = ProjectivePoint::parse(&field, point)?;
            let image = veronese_map(&p, *degree)?;
            Ok(Outcome::new(json!({"point": p.to_string(), "degree": degree, "image": image.to_string()}), image.to_string()))
        }
        Command::Arc { points } => {
            let field = need_field(cli)?;
            let pts = split_top(points, |c| c.is_whitespace() || c == ';' || c == ',')
                .into_iter()
                .map(|t| ProjectivePoint::parse(&field, t))
                .collect::<horncodes::Result<Vec<_>>>()?;
            let arc = is_k_arc(&pts)?;
            let collinear = match pts.first().map(ProjectivePoint::dimension) {
                Some(2) => Some(max_collinear(&pts)?),
                _ => None,
            };
            let mut text = format!("arc: {}\n", if arc { "yes" } else { "no" });
            if let Some(c) = collinear {
                let _ = writeln!(text, "max collinear: {c}");
            }
            Ok(Outcome::new(json!({"points": strings(&pts), "is_arc": arc, "max_collinear": collinear}), text))
        }
        Command::Collineations { n } => {
            let field = need_field(cli)?;
            let report = collineation_invariance_check(&field, *n)?;
            let text = lines(report.checks.iter().map(|c| format!("{}: {}", c.collineation, if c.preserved { "preserved" } else { "NOT preserved" })));
            let mut out = Outcome::new(serde_json::to_value(&report).unwrap_or(Value::Null), text);
            if !report.all_preserved() {
                out.failure = Some("a collineation moved the curve".into());
            }
            Ok(out)
        }
        Command::Omega { set, n, p } => {
            let set = index_list(set)?;
            let out = omega_closure(&set, *n, *p)?;
            let text = format!("{{{}}}", strings(&out).join(","));
            Ok(Outcome::new(json!({"set": set, "n": n, "p": p, "omega": out}), text))
        }
        Command::Psi { set, n } => {
            let set = index_list(set)?;
            let out = psi_closure(&set, *n)?;
            let text = format!("{{{}}}", strings(&out).join(","));
            Ok(Outcome::new(json!({"set": set, "n": n, "psi": out}), text))
        }
        Command::RrBasis { divisor } => {
            let field = need_field(cli)?;
            let d = Divisor::parse(&field, divisor)?;
            let basis = riemann_roch_basis(&d);
            Ok(Outcome::new(
                json!({"divisor": d.to_string(), "degree": d.degree(), "dimension": basis.len(), "basis": strings(&basis)}),
                lines(&basis),
            ))
        }
        Command::Code(cmd) => code_cmd(cli, cmd),
        Command::Verify { suite } => verify(suite),
    }
}

fn partition_cmd(cmd: &PartitionCmd) -> Result<Outcome> {
    Ok(match cmd {
        PartitionCmd::List { n } => {
            let all = partitions_of(*n);
            Outcome::new(json!({"n": n, "count": all.len(), "partitions": strings(&all)}), lines(&all))
        }
        PartitionCmd::Conjugate { lambda } => {
            let l = partition(lambda)?;
            let c = conjugate(&l);
            Outcome::new(json!({"lambda": l.to_string(), "conjugate": c.to_string()}), c.to_string())
        }
        PartitionCmd::FromIndexSet { set, n } => {
            let set = IndexSet::parse(set, *n)?;
            let p = partition_from_index_set(&set, set.len())?;
            Outcome::new(json!({"set": set.to_string(), "n": n, "r": set.len(), "partition": p.to_string()}), p.to_string())
        }
    })
}

fn triples_payload(n: usize, r: usize, triples: &[IndexTriple]) -> Value {
    json!({"n": n, "r": r, "count": triples.len(), "triples": strings(triples)})
}

fn horn_cmd(cmd: &HornCmd) -> Result<Outcome> {
    Ok(match *cmd {
        HornCmd::U { n, r } => {
            let u = u_set(n, r)?;
            Outcome::new(triples_payload(n, r, &u), format_triples(&u))
        }
        HornCmd::T { n, r } => {
            let t = t_set(n, r)?;
            Outcome::new(triples_payload(n, r, &t), format_triples(&t))
        }
        HornCmd::Check { n, r } => {
            let report = horn_lr_consistency(n, r)?;
            let entry = |set: &str, e: &horncodes::horn::HornLrEntry| {
                json!({"set": set, "triple": e.triple.to_string(), "lambda": e.lambda.to_string(), "mu": e.mu.to_string(), "nu": e.nu.to_string(), "coefficient": e.coefficient})
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            for (set, entries) in [("T", &report.in_t), ("U\\T", &report.outside_t)] {
                for e in entries {
                    rows.push(entry(set, e));
                    let _ = writeln!(text, "{set:<3} {}  {} {} {}  c={}", e.triple, e.lambda, e.mu, e.nu, e.coefficient);
                }
            }
            let consistent = report.is_consistent();
            let _ = writeln!(text, "consistent: {}", if consistent { "yes" } else { "no" });
            let mut out = Outcome::new(json!({"n": n, "r": r, "consistent": consistent, "entries": rows}), text);
            if !consistent {
                out.failure = Some(format!("Horn-LR consistency fails for n={n} r={r}"));
            }
            out
        }
    })
}

fn field_cmd(field: &Field, cmd: &FieldCmd) -> Result<Outcome> {
    let el = |s: &str| -> Result<FieldElement> { Ok(FieldElement::new(field, field.parse(s)?)?) };
    let binary = |op: &str, a: &str, b: &str| -> Result<Outcome> {
        let (x, y) = (el(a)?, el(b)?);
        let z = match op {
            "add" => x.checked_add(&y),
            "sub" => x.checked_sub(&y),
            "mul" => x.checked_mul(&y),
            _ => x.checked_div(&y),
        }?;
        Ok(Outcome::new(json!({"field": field.to_string(), "op": op, "a": x, "b": y, "result": z}), z.to_string()))
    };
    match cmd {
        FieldCmd::Info => {
            let elements: Vec<String> = field.values().map(|v| field.format(v)).collect();
            let text = format!(
                "field: GF({}) = {}\ncharacteristic: {}\ndegree: {}\ngenerator: {}\nelements: {}\n",
                field.order(),
                field,
                field.characteristic(),
                field.degree(),
                field.format(field.generator()),
                elements.join(" ")
            );
            Ok(Outcome::new(
                json!({
                    "field": field.to_string(),
                    "order": field.order(),
                    "characteristic": field.characteristic(),
                    "degree": field.degree(),
                    "generator": field.format(field.generator()),
                    "elements": elements,
                }),
                text,
            ))
        }
        FieldCmd::Add { a, b } => binary("add", a, b),
        FieldCmd::Sub { a, b } => binary("sub", a, b),
        FieldCmd::Mul { a, b } => binary("mul", a, b),
        FieldCmd::Div { a, b } => binary("div", a, b),
        FieldCmd::Inv { a } => {
            let x = el(a)?;
            let z = x.inverse()?;
            Ok(Outcome::new(json!({"field": field.to_string(), "op": "inv", "a": x, "result": z}), z.to_string()))
        }
        FieldCmd::Pow { a, e } => {
            let x = el(a)?;
            let z = x.pow(*e);
            Ok(Outcome::new(json!({"field": field.to_string(), "op": "pow", "a": x, "e": e, "result": z}), z.to_string()))
        }
    }
}

fn code_outcome(code: &LinearCode, d: Option<usize>, extra: Value) -> Outcome {
    let mut payload = json!({"code": code, "min_distance": d});
    if let (Value::Object(p), Value::Object(e)) = (&mut payload, extra) {
        p.extend(e);
    }
    Outcome::new(payload, code.to_text(d))
}

fn code_cmd(cli: &Cli, cmd: &CodeCmd) -> Result<Outcome> {
    match cmd {
        CodeCmd::Eval { divisor, points, distance, bound } => {
            let field = need_field(cli)?;
            let d = Divisor::parse(&field, divisor)?;
            let points = match points {
                Some(p) => p1_points(&field, p)?,
                None => field.values().map(P1Point::Finite).filter(|p| d.multiplicity(*p) == 0).collect(),
            };
            let code = evaluation_code(&d, &points)?;
            let dist = if *distance { Some(min_distance(&code, *bound)?) } else { None };
            let pts: Vec<String> = points.iter().map(|p| p.format(&field)).collect();
            Ok(code_outcome(&code, dist, json!({"divisor": d.to_string(), "points": pts})))
        }
        CodeCmd::ThreePoint { a, b, c, d, q, distance, bound } => {
            let tp = three_point_code(*a, *b, *c, *d, *q)?;
            let dist = if *distance { Some(min_distance(&tp.code, *bound)?) } else { None };
            Ok(code_outcome(&tp.code, dist, json!({"divisor": tp.divisor.to_string(), "points": tp.points})))
        }
        CodeCmd::Mindist { generator, file, bound } => {
            let field = need_field(cli)?;
            let code = match (generator, file) {
                (Some(g), _) => {
                    let rows = linalg::parse_matrix(&field, g)?;
                    let n = rows.first().map_or(0, Vec::len);
                    LinearCode::new(&field, n, rows)?
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?;
                    LinearCode::parse(&field, &text)?
                }
                (None, None) => return Err(CliError("give --generator or --file".into())),
            };
            let d = min_distance(&code, *bound)?;
            Ok(code_outcome(&code, Some(d), json!({})))
        }
        CodeCmd::Grassmann { n, r } => {
            let field = need_field(cli)?;
            let p = grassmann_code_params(&field, *n, *r)?;
            let brute = p.dimension_bruteforce.map_or_else(|| "not enumerated".to_string(), |d| d.to_string());
            let text = format!(
                "length: {}\ndimension (printed convention): {}\ndimension (Plücker rank): {brute}\nplucker coordinates: {}\n",
                p.length, p.dimension_printed, p.plucker_coordinates
            );
            Ok(Outcome::new(
                json!({
                    "n": p.n,
                    "r": p.r,
                    "q": p.q,
                    "length": p.length.to_string(),
                    "dimension_printed": p.dimension_printed.to_string(),
                    "dimension_bruteforce": p.dimension_bruteforce,
                    "plucker_coordinates": p.plucker_coordinates.to_string(),
                }),
                text,
            ))
        }
        CodeCmd::Orbit { subspace, generators } => {
            let field = need_field(cli)?;
            let u = linalg::parse_matrix(&field, subspace)?;
            let gens = generators
                .split('/')
                .map(|g| linalg::parse_matrix(&field, g))
                .collect::<horncodes::Result<Vec<_>>>()?;
            let orbit = grassmann_orbit(&field, &u, &gens)?;
            let rendered: Vec<String> = orbit
                .iter()
                .map(|m| m.iter().map(|r| r.iter().map(|&v| field.format(v)).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" | "))
                .collect();
            let text = format!("orbit size: {}\n{}", orbit.len(), lines(&rendered));
            Ok(Outcome::new(json!({"size": orbit.len(), "orbit": rendered}), text))
        }
        CodeCmd::Rational { phi, points } => {
            let field = need_field(cli)?;
            let phi = RationalFunction::parse(&field, phi)?;
            let points = p1_points(&field, points)?;
            let word = rational_map_code(&phi, &points)?;
            let word: Vec<String> = word.iter().map(|&v| field.format(v)).collect();
            Ok(Outcome::new(json!({"phi": phi.to_string(), "codeword": word}), word.join(" ")))
        }
        CodeCmd::ConfigOrbit { points, perms, ordered } => {
            let field = need_field(cli)?;
            let config = p1_points(&field, points)?;
            let gens = perms
                .split('/')
                .map(|p| Permutation::parse(p, config.len()))
                .collect::<horncodes::Result<Vec<_>>>()?;
            let mode = if *ordered { TupleMode::Ordered } else { TupleMode::Unordered };
            let orbit = configuration_orbits(&config, &gens, mode)?;
            let rendered: Vec<String> =
                orbit.iter().map(|c| c.iter().map(|p| p.format(&field)).collect::<Vec<_>>().join(",")).collect();
            let text = format!("orbit size: {}\n{}", orbit.len(), lines(&rendered));
            Ok(Outcome::new(json!({"mode": mode, "size": orbit.len(), "orbit": rendered}), text))
        }
    }
}

fn verify(suite: &str) -> Result<Outcome> {
    let suite = Suite::from_str(suite)?;
    let reports = run_suite(suite);
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{}", r.summary_line());
        for c in &r.checks {
            let _ = writeln!(text, "{c}");
        }
    }
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| format!("C{} {}", r.id, r.title)).collect();
    let all = failed.is_empty();
    let _ = writeln!(text, "{}", if all { "all criteria passed" } else { "some criteria failed" });
    let mut out = Outcome::new(json!({"suite": suite, "passed": all, "criteria": reports}), text);
    if !all {
        out.failure = Some(format!("failed: {}", failed.join(", ")));
    }
    Ok(out)
}
