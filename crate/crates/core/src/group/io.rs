//! Text formats for groups and family specification strings.
//!
//! Cayley format: a header `cayley n [p]` followed by `n` rows of `n`
//! whitespace-separated 0-based indices. Permutation format: a header
//! `perm k` followed by one generator per line in cycle notation on the
//! points `1..k`, with `()` for the identity. Blank lines and lines starting
//! with `#` are ignored in both.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::families::check_prime_power;
use crate::group::{
    affine_class_two, agl1, alternating, central_product_auto, cyclic, dihedral, direct_product,
    elementary_abelian, extraspecial, quaternion, semidirect_product, sl2, symmetric,
    ExtraspecialType, FiniteGroup, SemidirectSpec,
};

/// A parsed group file with the prime suggested in its header, if any.
#[derive(Clone, Debug)]
pub struct GroupFile {
    pub group: FiniteGroup,
    pub prime: Option<u64>,
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

fn parse_number(line: usize, col: usize, tok: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| {
        Error::parse(
            line,
            col,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

pub fn parse_group_text(text: &str, max_order: usize) -> Result<GroupFile> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let mut toks = tokens(header);
    let (col, kind) = toks
        .next()
        .ok_or_else(|| Error::parse(ln, 1, "missing header"))?;
    match kind {
        "cayley" => {
            let (c, t) = toks
                .next()
                .ok_or_else(|| Error::parse(ln, col, "missing order"))?;
            let n = parse_number(ln, c, t)?;
            let prime = match toks.next() {
                Some((c, t)) => Some(parse_number(ln, c, t)? as u64),
                None => None,
            };
            if let Some((c, t)) = toks.next() {
                return Err(Error::parse(ln, c, format!("unexpected `{t}` in header")));
            }
            if n > max_order {
                return Err(Error::OrderCap { cap: max_order });
            }
            let mut rows = Vec::with_capacity(n);
            for (ln, line) in lines.by_ref().take(n) {
                let mut row = Vec::with_capacity(n);
                for (c, t) in tokens(line) {
                    let v = parse_number(ln, c, t)?;
                    if v >= n {
                        return Err(Error::parse(
                            ln,
                            c,
                            format!("index {v} out of range 0..{n}"),
                        ));
                    }
                    row.push(v);
                }
                if row.len() != n {
                    return Err(Error::parse(
                        ln,
                        1,
                        format!("row has {} entries, expected {n}", row.len()),
                    ));
                }
                rows.push(row);
            }
            if rows.len() != n {
                return Err(Error::parse(
                    ln,
                    1,
                    format!("expected {n} rows, found {}", rows.len()),
                ));
            }
            if let Some((ln, _)) = lines.next() {
                return Err(Error::parse(ln, 1, "trailing content after the table"));
            }
            Ok(GroupFile {
                group: FiniteGroup::from_table(&rows, max_order)?,
                prime,
            })
        }
        "perm" => {
            let (c, t) = toks
                .next()
                .ok_or_else(|| Error::parse(ln, col, "missing degree"))?;
            let k = parse_number(ln, c, t)?;
            let mut gens = Vec::new();
            for (ln, line) in lines {
                gens.push(parse_cycles(ln, line, k)?);
            }
            Ok(GroupFile {
                group: FiniteGroup::from_permutations(k, &gens, max_order)?,
                prime: None,
            })
        }
        other => Err(Error::parse(
            ln,
            col,
            format!("unknown format `{other}`, expected `cayley` or `perm`"),
        )),
    }
}

/// Parses cycle notation such as `(1 2 3)(4 5)` into an image table on `0..k`.
pub fn parse_cycles(ln: usize, line: &str, k: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut moved = vec![false; k];
    let mut chars = line.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        if ch.is_whitespace() {
            continue;
        }
        if ch != '(' {
            return Err(Error::parse(
                ln,
                i + 1,
                format!("expected `(`, found `{ch}`"),
            ));
        }
        let mut cycle: Vec<usize> = Vec::new();
        let mut num = String::new();
        let mut num_col = 0;
        let mut closed = false;
        for (j, c) in chars.by_ref() {
            if c.is_ascii_digit() {
                if num.is_empty() {
                    num_col = j + 1;
                }
                num.push(c);
                continue;
            }
            if !num.is_empty() {
                let pt = parse_number(ln, num_col, &num)?;
                if pt == 0 || pt > k {
                    return Err(Error::parse(
                        ln,
                        num_col,
                        format!("point {pt} outside 1..{k}"),
                    ));
                }
                cycle.push(pt - 1);
                num.clear();
            }
            match c {
                ')' => {
                    closed = true;
                    break;
                }
                ',' | ' ' | '\t' => {}
                other => {
                    return Err(Error::parse(
                        ln,
                        j + 1,
                        format!("unexpected `{other}` in cycle"),
                    ))
                }
            }
        }
        if !closed {
            return Err(Error::parse(ln, i + 1, "unclosed cycle"));
        }
        for &x in &cycle {
            if std::mem::replace(&mut moved[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "line {ln}: point {} appears twice",
                    x + 1
                )));
            }
        }
        for (idx, &x) in cycle.iter().enumerate() {
            perm[x] = cycle[(idx + 1) % cycle.len()];
        }
    }
    Ok(perm)
}

pub fn read_group_file(path: &Path, max_order: usize) -> Result<GroupFile> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group_text(&text, max_order)
}

/// Serializes a group in the Cayley format.
pub fn write_cayley(g: &FiniteGroup, prime: Option<u64>) -> String {
    let mut out = String::new();
    match prime {
        Some(p) => writeln!(out, "cayley {} {p}", g.order()),
        None => writeln!(out, "cayley {}", g.order()),
    }
    .expect("writing to a string");
    for a in 0..g.order() {
        let row: Vec<String> = g.row(a).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// An action file: one line per element of `H`, each the image table of an
/// automorphism of `N`.
pub fn parse_action_text(text: &str) -> Result<Vec<Vec<usize>>> {
    content_lines(text)
        .map(|(ln, line)| tokens(line).map(|(c, t)| parse_number(ln, c, t)).collect())
        .collect()
}

/// A parsed family specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    ElementaryAbelian(usize, usize),
    Extraspecial(usize, ExtraspecialType),
    Agl1(usize),
    AffineClassTwo(usize, usize, usize),
    Sl2(usize),
    Symmetric(usize),
    Alternating(usize),
    Direct(Vec<FamilySpec>),
    Central(Box<FamilySpec>, Box<FamilySpec>),
    Semidirect {
        kernel: String,
        acting: String,
        action: String,
    },
}

#[derive(Debug)]
enum Node {
    Atom(String),
    Call(String, Vec<Node>),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(1, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn node(&mut self) -> Result<Node> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && !matches!(self.s[self.pos], b'(' | b')' | b',') {
            self.pos += 1;
        }
        let name = String::from_utf8_lossy(&self.s[start..self.pos])
            .trim()
            .to_string();
        if name.is_empty() {
            return Err(self.err("expected a name"));
        }
        self.skip_ws();
        if self.pos < self.s.len() && self.s[self.pos] == b'(' {
            self.pos += 1;
            let mut args = Vec::new();
            loop {
                args.push(self.node()?);
                self.skip_ws();
                match self.s.get(self.pos) {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected `,` or `)`")),
                }
            }
            Ok(Node::Call(name, args))
        } else {
            Ok(Node::Atom(name))
        }
    }
}

fn atom_number(n: &Node) -> Result<usize> {
    match n {
        Node::Atom(s) => s
            .parse()
            .map_err(|_| Error::InvalidFamily(format!("expected a number, found `{s}`"))),
        Node::Call(name, _) => Err(Error::InvalidFamily(format!(
            "expected a number, found `{name}(…)`"
        ))),
    }
}

fn atom_string(n: &Node) -> Result<String> {
    match n {
        Node::Atom(s) => Ok(s.clone()),
        Node::Call(name, _) => Err(Error::InvalidFamily(format!(
            "expected a path, found `{name}(…)`"
        ))),
    }
}

/// `C6`, `D8`, `Q8`, `S4`, `A4` shorthands.
fn shorthand(name: &str) -> Option<FamilySpec> {
    let (head, digits) = (name.get(..1)?, name.get(1..)?);
    let n: usize = digits.parse().ok()?;
    match head {
        "C" => Some(FamilySpec::Cyclic(n)),
        "D" => Some(FamilySpec::Dihedral(n)),
        "Q" => Some(FamilySpec::Quaternion(n)),
        "S" => Some(FamilySpec::Symmetric(n)),
        "A" => Some(FamilySpec::Alternating(n)),
        _ => None,
    }
}

fn to_spec(node: &Node) -> Result<FamilySpec> {
    let arity = |args: &[Node], k: usize, name: &str| {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidFamily(format!(
                "{name} takes {k} argument(s), got {}",
                args.len()
            )))
        }
    };
    match node {
        Node::Atom(name) => {
            shorthand(name).ok_or_else(|| Error::InvalidFamily(format!("unknown group `{name}`")))
        }
        Node::Call(name, args) => {
            let lname = name.to_ascii_lowercase();
            match lname.as_str() {
                "cyclic" | "c" => {
                    arity(args, 1, name)?;
                    Ok(FamilySpec::Cyclic(atom_number(&args[0])?))
                }
                "dihedral" | "d" => {
                    arity(args, 1, name)?;
                    Ok(FamilySpec::Dihedral(atom_number(&args[0])?))
                }
                "quaternion" | "q" => {
                    arity(args, 1, name)?;
                    Ok(FamilySpec::Quaternion(atom_number(&args[0])?))
                }
                "symmetric" => {
                    arity(args, 1, name)?;
                    Ok(FamilySpec::Symmetric(atom_number(&args[0])?))
                }
                "alternating" => {
                    arity(args, 1, name)?;
                    Ok(FamilySpec::Alternating(atom_number(&args[0])?))
                }
                "elementary_abelian" => {
                    arity(args, 2, name)?;
                    Ok(FamilySpec::ElementaryAbelian(
                        atom_number(&args[0])?,
                        atom_number(&args[1])?,
                    ))
                }
                "extraspecial" => {
                    arity(args, 2, name)?;
                    let order = atom_number(&args[0])?;
                    let (p, d) = check_prime_power(order)?;
                    if d != 3 {
                        return Err(Error::InvalidFamily(format!(
                            "extraspecial order {order} is not p^3"
                        )));
                    }
                    let kind = match atom_string(&args[1])?.as_str() {
                        "+" | "plus" => ExtraspecialType::Plus,
                        "-" | "minus" => ExtraspecialType::Minus,
                        other => {
                            return Err(Error::InvalidFamily(format!(
                                "extraspecial type must be + or -, found `{other}`"
                            )))
                        }
                    };
                    Ok(FamilySpec::Extraspecial(p, kind))
                }
                "agl" => {
                    arity(args, 2, name)?;
                    if atom_number(&args[0])? != 1 {
                        return Err(Error::Unsupported("only AGL(1, q) is supported".into()));
                    }
                    Ok(FamilySpec::Agl1(atom_number(&args[1])?))
                }
                "ac2" | "affine_class_two" => {
                    arity(args, 3, name)?;
                    Ok(FamilySpec::AffineClassTwo(
                        atom_number(&args[0])?,
                        atom_number(&args[1])?,
                        atom_number(&args[2])?,
                    ))
                }
                "sl2" => {
                    arity(args, 1, name)?;
                    Ok(FamilySpec::Sl2(atom_number(&args[0])?))
                }
                "direct" | "direct_product" => {
                    if args.is_empty() {
                        return Err(Error::InvalidFamily("direct product of nothing".into()));
                    }
                    Ok(FamilySpec::Direct(
                        args.iter().map(to_spec).collect::<Result<_>>()?,
                    ))
                }
                "central" | "central_product" => {
                    arity(args, 2, name)?;
                    Ok(FamilySpec::Central(
                        Box::new(to_spec(&args[0])?),
                        Box::new(to_spec(&args[1])?),
                    ))
                }
                "sdp" => {
                    arity(args, 3, name)?;
                    Ok(FamilySpec::Semidirect {
                        kernel: atom_string(&args[0])?,
                        acting: atom_string(&args[1])?,
                        action: atom_string(&args[2])?,
                    })
                }
                _ => Err(Error::InvalidFamily(format!("unknown family `{name}`"))),
            }
        }
    }
}

impl FamilySpec {
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let node = p.node()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        to_spec(&node)
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        let g = match self {
            FamilySpec::Cyclic(m) => cyclic(*m)?,
            FamilySpec::Dihedral(n) => dihedral(*n)?,
            FamilySpec::Quaternion(n) => quaternion(*n)?,
            FamilySpec::ElementaryAbelian(p, d) => elementary_abelian(*p, *d)?,
            FamilySpec::Extraspecial(p, kind) => extraspecial(*p, *kind)?,
            FamilySpec::Agl1(q) => agl1(*q)?,
            FamilySpec::AffineClassTwo(q, w, j) => {
                if q.saturating_mul(*w).saturating_mul(q.saturating_sub(1)) > max_order {
                    return Err(Error::OrderCap { cap: max_order });
                }
                affine_class_two(*q, *w, *j)?
            }
            FamilySpec::Sl2(p) => sl2(*p)?,
            FamilySpec::Symmetric(n) => symmetric(*n)?,
            FamilySpec::Alternating(n) => alternating(*n)?,
            FamilySpec::Direct(parts) => {
                let mut acc = parts[0].build(max_order)?;
                for part in &parts[1..] {
                    let next = part.build(max_order)?;
                    if acc.order() * next.order() > max_order {
                        return Err(Error::OrderCap { cap: max_order });
                    }
                    acc = direct_product(&acc, &next);
                }
                acc
            }
            FamilySpec::Central(a, b) => {
                let (a, b) = (a.build(max_order)?, b.build(max_order)?);
                if a.order() * b.order() > max_order.saturating_mul(a.center().order()) {
                    return Err(Error::OrderCap { cap: max_order });
                }
                central_product_auto(&a, &b)?.group
            }
            FamilySpec::Semidirect {
                kernel,
                acting,
                action,
            } => {
                let n = read_group_file(Path::new(kernel), max_order)?.group;
                let h = read_group_file(Path::new(acting), max_order)?.group;
                let text = std::fs::read_to_string(action)
                    .map_err(|e| Error::Io(format!("{action}: {e}")))?;
                let spec = SemidirectSpec {
                    kernel_group: n,
                    acting_group: h,
                    action: parse_action_text(&text)?,
                };
                semidirect_product(&spec)?
            }
        };
        if g.order() > max_order {
            return Err(Error::OrderCap { cap: max_order });
        }
        Ok(g)
    }
}

/// Parses and builds a family specification string.
pub fn construct_family(spec: &str, max_order: usize) -> Result<FiniteGroup> {
    FamilySpec::parse(spec)?.build(max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families() {
        assert_eq!(FamilySpec::parse("AGL(1,8)").unwrap(), FamilySpec::Agl1(8));
        assert_eq!(FamilySpec::parse("SL2(3)").unwrap(), FamilySpec::Sl2(3));
        assert_eq!(FamilySpec::parse("Q8").unwrap(), FamilySpec::Quaternion(8));
        assert_eq!(
            FamilySpec::parse("cyclic(6)").unwrap(),
            FamilySpec::Cyclic(6)
        );
        assert_eq!(
            FamilySpec::parse("extraspecial(27, -)").unwrap(),
            FamilySpec::Extraspecial(3, ExtraspecialType::Minus)
        );
        assert_eq!(
            FamilySpec::parse("central(SL2(3), SL2(3))").unwrap(),
            FamilySpec::Central(Box::new(FamilySpec::Sl2(3)), Box::new(FamilySpec::Sl2(3)))
        );
        assert!(FamilySpec::parse("AGL(1,6)").unwrap().build(2000).is_err());
        assert!(FamilySpec::parse("nonsense(3)").is_err());
        assert!(FamilySpec::parse("cyclic(3").is_err());
    }

    #[test]
    fn builds_products() {
        let g = construct_family("direct(SL2(3), C3)", 2000).unwrap();
        assert_eq!(g.order(), 72);
        let g = construct_family("central(SL2(3), SL2(3))", 2000).unwrap();
        assert_eq!(g.order(), 288);
        assert!(matches!(
            construct_family("direct(C10, C10, C10)", 500),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn cayley_round_trip() {
        let g = construct_family("Q8", 100).unwrap();
        let text = write_cayley(&g, Some(2));
        let back = parse_group_text(&text, 100).unwrap();
        assert_eq!(back.group, g);
        assert_eq!(back.prime, Some(2));
    }

    #[test]
    fn cayley_errors_have_positions() {
        let err = parse_group_text("cayley 2\n0 1\n1 x\n", 10).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                column: 3,
                message: "expected a non-negative integer, found `x`".into()
            }
        );
        assert!(matches!(
            parse_group_text("cayley 2\n0 1\n", 10),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_group_text("table 2\n", 10),
            Err(Error::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
    }

    #[test]
    fn permutation_files() {
        let f = parse_group_text("perm 4\n(1 2 3 4)\n(1 3)\n", 100).unwrap();
        assert_eq!(f.group.order(), 8);
        let f = parse_group_text("perm 3\n()\n", 100).unwrap();
        assert_eq!(f.group.order(), 1);
        assert!(parse_group_text("perm 3\n(1 4)\n", 100).is_err());
        assert!(parse_group_text("perm 3\n(1 2)(2 3)\n", 100).is_err());
    }
}
