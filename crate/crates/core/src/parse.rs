//! Text grammars for class-set descriptors and spectrum expressions.
//!
//! Sets: `{C2,D3,SO2}`, `Lct{SO2}`, `tailD(4)`, `tailC(1)`, `all`, bare class
//! tokens, parentheses, `+` for union and `-` for difference, e.g.
//! `tailD(3)+O2-{D5}`.
//!
//! Expressions: `S0`, `cell(K)`, `basic(K,cutoff)`, `iso(K)`,
//! `wedge(e,...)`, `smash(e,...)`, `susp(n,e)`, `dual(e)`.

use crate::classset::ClassSet;
use crate::error::{Error, Result};
use crate::group::{GroupId, Series, SubgroupClass};
use crate::isotropy::{lambda_ct, SpectrumExpr};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(0, char::len_utf8);
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, err: &dyn Fn(String) -> Error) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(format!("expected {c:?} at offset {} in {:?}", self.pos, self.text)))
        }
    }

    /// An identifier-like token: letters, digits, `/` and a leading `-`.
    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let mut end = 0;
        for (i, ch) in rest.char_indices() {
            if ch.is_ascii_alphanumeric() || ch == '_' || (i == 0 && ch == '-') {
                end = i + ch.len_utf8();
            } else {
                break;
            }
        }
        self.pos += end;
        &rest[..end]
    }

    fn finish(&mut self, err: &dyn Fn(String) -> Error) -> Result<()> {
        if self.peek().is_some() {
            Err(err(format!("unexpected trailing input {:?}", self.rest())))
        } else {
            Ok(())
        }
    }
}

fn set_err(msg: String) -> Error {
    Error::MalformedDescriptor(msg)
}

fn expr_err(msg: String) -> Error {
    Error::MalformedExpr(msg)
}

/// Parses a class-set descriptor for `g`.
pub fn parse_set(g: &GroupId, text: &str) -> Result<ClassSet> {
    let mut c = Cursor::new(text);
    let s = set_expr(g, &mut c)?;
    c.finish(&set_err)?;
    Ok(s)
}

fn set_expr(g: &GroupId, c: &mut Cursor) -> Result<ClassSet> {
    let mut acc = set_term(g, c)?;
    loop {
        if c.eat('+') {
            acc = acc.union(&set_term(g, c)?)?;
        } else if c.eat('-') {
            acc = acc.difference(&set_term(g, c)?)?;
        } else {
            return Ok(acc);
        }
    }
}

fn class_token(g: &GroupId, tok: &str, err: &dyn Fn(String) -> Error) -> Result<SubgroupClass> {
    g.parse_class(tok).map_err(|e| err(e.to_string()))
}

fn set_term(g: &GroupId, c: &mut Cursor) -> Result<ClassSet> {
    if c.eat('(') {
        let s = set_expr(g, c)?;
        c.expect(')', &set_err)?;
        return Ok(s);
    }
    if c.eat('{') {
        let mut s = ClassSet::empty(g);
        if c.eat('}') {
            return Ok(s);
        }
        loop {
            let tok = c.word();
            s.insert(class_token(g, tok, &set_err)?)?;
            if c.eat('}') {
                return Ok(s);
            }
            c.expect(',', &set_err)?;
        }
    }
    let word = c.word();
    match word {
        "" => Err(set_err(format!("expected a set at offset {} in {:?}", c.pos, c.text))),
        "Lct" => Ok(lambda_ct(&set_term(g, c)?)),
        "all" => Ok(ClassSet::all(g)),
        "tailC" | "tailD" => {
            let series = if word == "tailC" { Series::C } else { Series::D };
            c.expect('(', &set_err)?;
            let from: u64 = c.word().parse().map_err(|_| set_err(format!("{word} needs an index")))?;
            c.expect(')', &set_err)?;
            ClassSet::tail(g, series, from)
        }
        tok => Ok(ClassSet::from_classes(g, [class_token(g, tok, &set_err)?])?),
    }
}

/// Parses a spectrum expression for `g`.
pub fn parse_expr(g: &GroupId, text: &str) -> Result<SpectrumExpr> {
    let mut c = Cursor::new(text);
    let e = expr(g, &mut c)?;
    c.finish(&expr_err)?;
    e.validate(g)?;
    Ok(e)
}

fn integer<T: std::str::FromStr>(c: &mut Cursor, what: &str) -> Result<T> {
    let w = c.word();
    w.parse().map_err(|_| expr_err(format!("{what} must be an integer, got {w:?}")))
}

fn expr(g: &GroupId, c: &mut Cursor) -> Result<SpectrumExpr> {
    let head = c.word();
    if head == "S0" {
        return Ok(SpectrumExpr::Sphere);
    }
    if head.is_empty() {
        return Err(expr_err(format!("expected an expression at offset {} in {:?}", c.pos, c.text)));
    }
    c.expect('(', &expr_err)?;
    let e = match head {
        "cell" => SpectrumExpr::Cell(class_token(g, c.word(), &expr_err)?),
        "iso" => SpectrumExpr::IsoClass(class_token(g, c.word(), &expr_err)?),
        "basic" => {
            let class = class_token(g, c.word(), &expr_err)?;
            c.expect(',', &expr_err)?;
            SpectrumExpr::Basic { class, cutoff: integer(c, "cutoff")? }
        }
        "susp" => {
            let n = integer(c, "suspension degree")?;
            c.expect(',', &expr_err)?;
            SpectrumExpr::Susp(n, Box::new(expr(g, c)?))
        }
        "dual" => SpectrumExpr::Dual(Box::new(expr(g, c)?)),
        "wedge" | "smash" => {
            let mut args = Vec::new();
            if c.peek() != Some(')') {
                loop {
                    args.push(expr(g, c)?);
                    if !c.eat(',') {
                        break;
                    }
                }
            }
            if head == "wedge" {
                SpectrumExpr::Wedge(args)
            } else {
                SpectrumExpr::Smash(args)
            }
        }
        other => return Err(expr_err(format!("unknown constructor {other:?}"))),
    };
    c.expect(')', &expr_err)?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use SubgroupClass::*;

    #[test]
    fn set_descriptors() {
        let g = GroupId::O2;
        let s = parse_set(&g, "tailD(3) + O2").unwrap();
        assert_eq!(s.to_string(), "{O2}+tailD(3)");
        assert_eq!(parse_set(&g, &s.to_string()).unwrap(), s);
        let l = parse_set(&g, "Lct{SO2}").unwrap();
        assert!(l.contains(C(17)));
        assert_eq!(parse_set(&g, "all - Lct{SO2}").unwrap(), parse_set(&g, "tailD(1)+O2").unwrap());
        assert_eq!(parse_set(&g, "{}").unwrap(), ClassSet::empty(&g));
        assert_eq!(parse_set(&g, "D3").unwrap(), ClassSet::from_classes(&g, [D(3)]).unwrap());
        assert_eq!(parse_set(&GroupId::Circle, "Lct{C2,C3}").unwrap().to_string(), "{C2,C3}");
        for bad in ["{C2", "tailQ(3)", "{Q8}", "tailD(x)", "{C2} {C3}", "", "+"] {
            assert!(matches!(parse_set(&g, bad), Err(Error::MalformedDescriptor(_))), "{bad}");
        }
        assert!(parse_set(&GroupId::Circle, "tailD(2)").is_err());
    }

    #[test]
    fn expressions() {
        let g = GroupId::O2;
        let text = "wedge(susp(-2,cell(D3)),smash(basic(O2,3),dual(S0)),iso(SO2))";
        let e = parse_expr(&g, text).unwrap();
        assert_eq!(e.render(&g), text);
        assert_eq!(parse_expr(&g, "wedge()").unwrap(), SpectrumExpr::Wedge(vec![]));
        assert_eq!(parse_expr(&g, " basic( O2 , 5 ) ").unwrap(), SpectrumExpr::Basic { class: Full, cutoff: 5 });
        for bad in ["cell(A5)", "basic(O2)", "dual(iso(SO2))", "blob(S0)", "S0 S0", "susp(x,S0)", ""] {
            assert!(matches!(parse_expr(&g, bad), Err(Error::MalformedExpr(_))), "{bad}");
        }
    }
}
