//! Recursive descent parser for `.cfa` files.
//!
//! ```text
//! file  := decl*
//! decl  := kind NAME [(on|over) NAME] [in NAME] ('=' NAME '(' names ')' | '{' items '}')
//! items := [item (';' item)*] [';']
//! item  := gens names | params names | bracket entry | anchor entry
//!        | degree INT | repr NAME | '[' [names] ']' '=' expr | entry
//! entry := NAME NAME '=' expr
//! expr  := term (('+'|'-') term)*
//! term  := unary (('*'|'/') unary)*
//! unary := '-' unary | atom ['^' INT]
//! atom  := INT | '(' expr ')' | NAME ("'"* | '^(' INT ')')
//! ```

use crate::ast::{Body, Decl, Entry, Expr, Ident, Item, Kind, Pos};
use crate::error::{CliError, Result};
use crate::lexer::{tokenize, Tok, Token};

struct Parser<'a> {
    file: &'a str,
    toks: Vec<Token>,
    at: usize,
}

pub fn parse_file(file: &str, src: &str) -> Result<Vec<Decl>> {
    let mut p = Parser::new(file, src)?;
    let mut out = Vec::new();
    while p.peek() != &Tok::Eof {
        out.push(p.decl()?);
    }
    Ok(out)
}

/// A single expression, e.g. from a command-line argument.
pub fn parse_expr(file: &str, src: &str) -> Result<Expr> {
    let mut p = Parser::new(file, src)?;
    let e = p.expr()?;
    p.expect(&[Tok::Eof])?;
    Ok(e)
}

impl<'a> Parser<'a> {
    fn new(file: &'a str, src: &str) -> Result<Parser<'a>> {
        Ok(Parser {
            file,
            toks: tokenize(file, src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &[&str]) -> CliError {
        let want = match expected {
            [one] => one.to_string(),
            _ => format!("one of {}", expected.join(", ")),
        };
        CliError::parse(self.file, self.pos(), format!("expected {want}, found {}", self.peek()))
    }

    fn expect(&mut self, any: &[Tok]) -> Result<Token> {
        if any.contains(self.peek()) {
            Ok(self.bump())
        } else {
            let names: Vec<String> = any.iter().map(|t| t.to_string()).collect();
            Err(self.unexpected(&names.iter().map(String::as_str).collect::<Vec<_>>()))
        }
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn ident(&mut self) -> Result<Ident> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Ident { name, pos })
            }
            _ => Err(self.unexpected(&["identifier"])),
        }
    }

    fn int(&mut self) -> Result<u64> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected(&["integer"])),
        }
    }

    fn idents(&mut self) -> Result<Vec<Ident>> {
        let mut out = vec![self.ident()?];
        while self.eat(&Tok::Comma) {
            out.push(self.ident()?);
        }
        Ok(out)
    }

    fn decl(&mut self) -> Result<Decl> {
        let kind = match self.peek() {
            Tok::Ident(s) => Kind::from_keyword(s),
            _ => None,
        }
        .ok_or_else(|| self.unexpected(&["a declaration keyword (algebra, pva, poisson, lad, lcad, module, cochain, cocycle)"]))?;
        self.bump();
        let name = self.ident()?;
        let base = if self.is_keyword(kind.link()) {
            self.bump();
            Some(self.ident()?)
        } else {
            None
        };
        let coeff = if self.is_keyword("in") {
            self.bump();
            Some(self.ident()?)
        } else {
            None
        };
        let body = match self.peek() {
            Tok::Eq => {
                self.bump();
                let op = self.ident()?;
                self.expect(&[Tok::LParen])?;
                let args = self.idents()?;
                self.expect(&[Tok::RParen])?;
                Body::Derived { op, args }
            }
            Tok::LBrace => {
                self.bump();
                Body::Items(self.items()?)
            }
            _ => {
                let mut want = vec!["`=`", "`{`"];
                if base.is_none() {
                    want.insert(0, if kind == Kind::Module { "`over`" } else { "`on`" });
                }
                return Err(self.unexpected(&want));
            }
        };
        Ok(Decl { kind, name, base, coeff, body })
    }

    fn items(&mut self) -> Result<Vec<Item>> {
        let mut out = Vec::new();
        loop {
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            out.push(self.item()?);
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            self.expect(&[Tok::Semi, Tok::RBrace])?;
        }
    }

    fn item(&mut self) -> Result<Item> {
        if self.eat(&Tok::LBrack) {
            let names = if self.peek() == &Tok::RBrack { Vec::new() } else { self.idents()? };
            self.expect(&[Tok::RBrack])?;
            self.expect(&[Tok::Eq])?;
            return Ok(Item::Value(names, self.expr()?));
        }
        let head = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.unexpected(&["identifier", "`[`", "`}`"])),
        };
        // Entries have `=` third; `bracket`/`anchor` always prefix an entry.
        let is_kw = !matches!(self.peek_at(2), Tok::Eq) || head == "bracket" || head == "anchor";
        if is_kw {
            match head.as_str() {
                "gens" => {
                    self.bump();
                    return Ok(Item::Gens(self.idents()?));
                }
                "params" => {
                    self.bump();
                    return Ok(Item::Params(self.idents()?));
                }
                "bracket" => {
                    self.bump();
                    return Ok(Item::Bracket(self.entry()?));
                }
                "anchor" => {
                    self.bump();
                    return Ok(Item::Anchor(self.entry()?));
                }
                "degree" => {
                    self.bump();
                    return Ok(Item::Degree(self.int()? as usize));
                }
                "repr" => {
                    self.bump();
                    return Ok(Item::Repr(self.ident()?));
                }
                _ => {}
            }
        }
        Ok(Item::Entry(self.entry()?))
    }

    fn entry(&mut self) -> Result<Entry> {
        let left = self.ident()?;
        let right = self.ident()?;
        self.expect(&[Tok::Eq])?;
        Ok(Entry {
            left,
            right,
            value: self.expr()?,
        })
    }

    pub fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let a = self.atom()?;
        if self.eat(&Tok::Caret) {
            let n = self.int()?;
            let n = u32::try_from(n).map_err(|_| CliError::parse(self.file, self.pos(), "exponent is too large"))?;
            return Ok(Expr::Pow(Box::new(a), n));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(&[Tok::RParen])?;
                Ok(e)
            }
            Tok::Ident(_) => {
                let id = self.ident()?;
                let mut order: u64 = 0;
                if self.peek() == &Tok::Caret && self.peek_at(1) == &Tok::LParen {
                    self.bump();
                    self.bump();
                    order = self.int()?;
                    self.expect(&[Tok::RParen])?;
                } else {
                    while self.peek() == &Tok::Quote && self.toks[self.at].glued {
                        self.bump();
                        order += 1;
                    }
                }
                let order = u16::try_from(order).map_err(|_| CliError::parse(self.file, id.pos, "jet order is too large"))?;
                Ok(Expr::Name(id, order))
            }
            _ => Err(self.unexpected(&["integer", "identifier", "`(`", "`-`"])),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn virasoro_declaration() {
        let src = "algebra V { gens u; params c } pva Vir on V { u u = (D + 2*l)*u + c*l^3 }";
        let ds = parse_file("t", src).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[1].kind, Kind::Pva);
        assert_eq!(ds[1].base.as_ref().unwrap().name, "V");
        let Body::Items(items) = &ds[1].body else { panic!() };
        let Item::Entry(e) = &items[0] else { panic!() };
        assert_eq!(e.value.to_string(), "(D + 2*l)*u + c*l^3");
    }

    #[test]
    fn derived_declaration() {
        let ds = parse_file("t", "lcad K = kahler(Vir)").unwrap();
        assert_eq!(ds[0].to_string(), "lcad K = kahler(Vir)");
    }

    #[test]
    fn jets() {
        let e = parse_expr("t", "u'' * u^(5) - -v'^2").unwrap();
        assert_eq!(e.to_string(), "u''*u^(5) - -v'^2");
        let Expr::Sub(a, _) = e else { panic!() };
        let Expr::Mul(x, y) = *a else { panic!() };
        assert!(matches!(*x, Expr::Name(_, 2)));
        assert!(matches!(*y, Expr::Name(_, 5)));
    }

    #[test]
    fn errors_carry_position_and_expected_set() {
        let e = parse_file("f.cfa", "algebra V {\n  gens u,\n}").unwrap_err();
        assert_eq!(e.to_string(), "f.cfa:3:1: expected identifier, found `}`");
        let e = parse_file("f.cfa", "pva P on V { u u = l u }").unwrap_err();
        assert_eq!(e.to_string(), "f.cfa:1:22: expected one of `;`, `}`, found identifier `u`");
        let e = parse_file("f.cfa", "widget W").unwrap_err();
        assert!(e.to_string().starts_with("f.cfa:1:1: expected a declaration keyword"));
        let e = parse_file("f.cfa", "lcad K kahler(V)").unwrap_err();
        assert_eq!(e.to_string(), "f.cfa:1:8: expected one of `on`, `=`, `{`, found identifier `kahler`");
    }

    #[test]
    fn cochain_values() {
        let src = "cochain C on K in trivial { degree 2; repr basic; [du, du] = l1^3 - l2^3; [] = 0 }";
        let d = &parse_file("t", src).unwrap()[0];
        assert_eq!(d.coeff.as_ref().unwrap().name, "trivial");
        let Body::Items(items) = &d.body else { panic!() };
        assert_eq!(items.len(), 4);
        assert_eq!(items[2].to_string(), "[du, du] = l1^3 - l2^3");
    }
}
