//! The line-oriented `.alg` format.
//!
//! ```text
//! # comment
//! field rational            # or: field gf 7
//! vertices 3
//! arrow a 1 2
//! arrow b 2 3
//! relation a*b
//! module M
//!   dim 1,1,0
//!   map a [[1]]
//! ```
//!
//! Vertices are 1-based in files and 0-based everywhere else. A relation is a
//! sum of terms `[coeff*]x*y*...`, paths read left to right. A map matrix has
//! `dim(target)` rows and `dim(source)` columns; omitted maps are zero.

use std::fmt;
use std::fmt::Write as _;
use std::sync::Arc;

use qalg_core::qalgebra::{build_algebra, Arrow, DEFAULT_PATH_LENGTH_CAP};
use qalg_core::scalar::parse_scalar;
use qalg_core::{BoundQuiverAlgebra, Field, Matrix, Path, Quiver, Relation, Representation, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number; 0 when the error is not tied to a line.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

#[derive(Clone, Debug)]
pub struct ModuleBlock {
    pub name: String,
    pub line: usize,
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub modules: Vec<ModuleBlock>,
}

impl AlgebraFile {
    pub fn build(&self) -> Result<Arc<BoundQuiverAlgebra>, ParseError> {
        build_algebra(self.field, self.quiver.clone(), self.relations.clone(), DEFAULT_PATH_LENGTH_CAP)
            .or_else(|e| err(0, e.to_string()))
    }

    /// Module blocks as representations of `alg`.
    pub fn representations(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<Vec<(String, Representation)>, ParseError> {
        self.modules
            .iter()
            .map(|m| {
                Representation::new(alg.clone(), m.dims.clone(), m.maps.clone())
                    .map(|r| (m.name.clone(), r))
                    .or_else(|e| err(m.line, format!("module {}: {}", m.name, e)))
            })
            .collect()
    }
}

pub fn parse_field(text: &str) -> Option<Field> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["rational"] => Some(Field::Rational),
        ["gf", p] => {
            let p: u64 = p.parse().ok()?;
            Field::is_prime_modulus(p).then_some(Field::Prime(p))
        }
        _ => None,
    }
}

/// Line number, directive and rest of a line inside a module block.
type BodyLine = (usize, String, String);

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Parses a `.alg` file. `field` overrides the file's `field` directive.
pub fn parse_algebra_file(text: &str, field: Option<Field>) -> Result<AlgebraFile, ParseError> {
    let mut file_field: Option<Field> = None;
    let mut vertices: Option<usize> = None;
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut raw_relations: Vec<(usize, String)> = Vec::new();
    let mut raw_modules: Vec<(usize, String, Vec<BodyLine>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match head {
            "field" => {
                if file_field.is_some() {
                    return err(ln, "duplicate field directive");
                }
                match parse_field(rest) {
                    Some(f) => file_field = Some(f),
                    None => return err(ln, format!("unknown field '{}'", rest)),
                }
            }
            "vertices" => {
                if vertices.is_some() {
                    return err(ln, "duplicate vertices directive");
                }
                match rest.parse::<usize>() {
                    Ok(n) if n > 0 => vertices = Some(n),
                    _ => return err(ln, format!("bad vertex count '{}'", rest)),
                }
            }
            "arrow" => {
                let Some(n) = vertices else {
                    return err(ln, "arrow before vertices directive");
                };
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [name, s, t] = parts.as_slice() else {
                    return err(ln, "expected: arrow <name> <source> <target>");
                };
                if !valid_name(name) {
                    return err(ln, format!("bad arrow name '{}'", name));
                }
                if arrows.iter().any(|a| a.name == *name) {
                    return err(ln, format!("duplicate arrow '{}'", name));
                }
                let vertex = |s: &str| match s.parse::<usize>() {
                    Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                    _ => err(ln, format!("vertex '{}' not in 1..{}", s, n)),
                };
                arrows.push(Arrow { name: name.to_string(), source: vertex(s)?, target: vertex(t)? });
            }
            "relation" => raw_relations.push((ln, rest.to_string())),
            "module" => {
                if !valid_name(rest) {
                    return err(ln, format!("bad module name '{}'", rest));
                }
                if raw_modules.iter().any(|m| m.1 == rest) {
                    return err(ln, format!("duplicate module '{}'", rest));
                }
                raw_modules.push((ln, rest.to_string(), Vec::new()));
            }
            "dim" | "map" => match raw_modules.last_mut() {
                Some(m) => m.2.push((ln, head.to_string(), rest.to_string())),
                None => return err(ln, format!("'{}' outside a module block", head)),
            },
            other => return err(ln, format!("unknown directive '{}'", other)),
        }
    }

    let Some(n) = vertices else {
        return err(0, "missing vertices directive");
    };
    let field = field.or(file_field).unwrap_or(Field::Rational);
    let quiver = Quiver::new(n, arrows).or_else(|e| err(0, e.to_string()))?;
    let relations = raw_relations
        .iter()
        .map(|(ln, text)| parse_relation(text, &quiver, field).or_else(|m| err(*ln, m)))
        .collect::<Result<Vec<_>, _>>()?;
    let modules = raw_modules
        .into_iter()
        .map(|(ln, name, body)| parse_module(ln, name, &body, &quiver, field))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AlgebraFile { field, quiver, relations, modules })
}

fn parse_relation(text: &str, q: &Quiver, field: Field) -> Result<Relation, String> {
    if text.is_empty() {
        return Err("empty relation".into());
    }
    let mut terms = Vec::new();
    for term in text.split('+') {
        let factors: Vec<&str> = term.split('*').map(str::trim).collect();
        if factors.iter().any(|f| f.is_empty()) {
            return Err(format!("malformed term '{}'", term.trim()));
        }
        let (coeff, names) = match parse_scalar(field, factors[0]) {
            Some(c) if !valid_name(factors[0]) => (c, &factors[1..]),
            _ => (field.one(), &factors[..]),
        };
        if names.is_empty() {
            return Err(format!("term '{}' has no path", term.trim()));
        }
        let mut idx = Vec::with_capacity(names.len());
        for name in names {
            match q.arrow_index(name) {
                Some(a) => idx.push(a),
                None => return Err(format!("undeclared arrow '{}'", name)),
            }
        }
        let path = Path::from_arrows(q, idx).map_err(|e| e.to_string())?;
        terms.push((coeff, path));
    }
    Relation::new(terms).map_err(|e| e.to_string())
}

fn parse_module(
    line: usize,
    name: String,
    body: &[BodyLine],
    q: &Quiver,
    field: Field,
) -> Result<ModuleBlock, ParseError> {
    let mut dims: Option<Vec<usize>> = None;
    let mut maps: Vec<Option<Matrix>> = vec![None; q.arrows().len()];
    for (ln, head, rest) in body {
        let ln = *ln;
        if head == "dim" {
            if dims.is_some() {
                return err(ln, format!("module {}: duplicate dim line", name));
            }
            let d: Result<Vec<usize>, _> = rest.split(',').map(|x| x.trim().parse::<usize>()).collect();
            match d {
                Ok(d) if d.len() == q.vertex_count() => dims = Some(d),
                Ok(d) => {
                    return err(ln, format!("module {}: {} entries in dim, expected {}", name, d.len(), q.vertex_count()))
                }
                Err(_) => return err(ln, format!("module {}: bad dimension vector '{}'", name, rest)),
            }
            continue;
        }
        let Some(d) = &dims else {
            return err(ln, format!("module {}: map before dim", name));
        };
        let (arrow, matrix) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        let Some(a) = q.arrow_index(arrow) else {
            return err(ln, format!("undeclared arrow '{}'", arrow));
        };
        if maps[a].is_some() {
            return err(ln, format!("module {}: duplicate map for '{}'", name, arrow));
        }
        let rows = parse_matrix(matrix.trim(), field).or_else(|m| err(ln, m))?;
        let (r, c) = (d[q.arrow(a).target], d[q.arrow(a).source]);
        if !shape_ok(&rows, r, c) {
            return err(
                ln,
                format!("module {}: map {} must be {}x{} (dim target x dim source)", name, arrow, r, c),
            );
        }
        maps[a] = Some(Matrix::from_rows(field, c, if r == 0 { Vec::new() } else { rows }));
    }
    let Some(dims) = dims else {
        return err(line, format!("module {}: missing dim line", name));
    };
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(a, m)| m.unwrap_or_else(|| Matrix::zeros(field, dims[q.arrow(a).target], dims[q.arrow(a).source])))
        .collect();
    Ok(ModuleBlock { name, line, dims, maps })
}

fn shape_ok(rows: &[Vec<Scalar>], r: usize, c: usize) -> bool {
    if r == 0 {
        // `[]` or a list of empty rows is accepted for a map out of or into 0.
        return rows.iter().all(Vec::is_empty);
    }
    rows.len() == r && rows.iter().all(|row| row.len() == c)
}

/// `[[1,0],[0,1/2]]`; `[]` is the empty matrix.
fn parse_matrix(text: &str, field: Field) -> Result<Vec<Vec<Scalar>>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| format!("malformed matrix '{}'", text))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let body = inner
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| format!("malformed matrix '{}'", text))?;
    body.split("],[")
        .map(|row| {
            if row.is_empty() {
                return Ok(Vec::new());
            }
            row.split(',')
                .map(|x| parse_scalar(field, x).ok_or_else(|| format!("bad entry '{}'", x)))
                .collect()
        })
        .collect()
}

/// Writes `alg` in `.alg` syntax. Each module block is preceded by an
/// optional comment line.
pub fn emit_algebra_file(alg: &BoundQuiverAlgebra, header: &[String], modules: &[(String, Representation)]) -> String {
    let q = alg.quiver();
    let mut out = String::new();
    for h in header {
        writeln!(out, "# {}", h).unwrap();
    }
    writeln!(out, "field {}", alg.field()).unwrap();
    writeln!(out, "vertices {}", alg.vertex_count()).unwrap();
    for a in q.arrows() {
        writeln!(out, "arrow {} {} {}", a.name, a.source + 1, a.target + 1).unwrap();
    }
    for r in alg.relations() {
        writeln!(out, "relation {}", r.display(q)).unwrap();
    }
    for (name, m) in modules {
        writeln!(out, "module {}", name).unwrap();
        let dims: Vec<String> = m.dims().iter().map(usize::to_string).collect();
        writeln!(out, "  dim {}", dims.join(",")).unwrap();
        for (a, arrow) in q.arrows().iter().enumerate() {
            let mat = m.map(a);
            if mat.is_zero() {
                continue;
            }
            let rows: Vec<String> = (0..mat.rows())
                .map(|r| {
                    let row: Vec<String> = (0..mat.cols()).map(|c| mat.get(r, c).to_string()).collect();
                    format!("[{}]", row.join(","))
                })
                .collect();
            writeln!(out, "  map {} [{}]", arrow.name, rows.join(",")).unwrap();
        }
    }
    out
}
