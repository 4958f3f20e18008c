use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0..n-1}`, stored as its image vector.
///
/// Composition follows the left-action convention used throughout the
/// crate: `a.compose(&b)` is `a ∘ b`, i.e. `b` is applied first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    /// Builds a permutation from its images, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= n {
                return Err(Error::Range {
                    row: 0,
                    col: i,
                    value: x as i64,
                    size: n,
                });
            }
            if seen[x] {
                return Err(Error::Shape(format!("value {x} appears twice in permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm(images)
    }

    pub fn from_usize(images: &[usize]) -> Result<Perm> {
        Perm::from_images(images.iter().map(|&x| x as u32).collect())
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Perm) -> Perm {
        self.compose(other).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &x)| *i as u32 == x).count()
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted cycle lengths, fixed points included as 1-cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.fixed_points()));
        t.sort_unstable();
        t
    }

    /// Parses disjoint-cycle notation over 0-based points, e.g. `"(0 1 2)(3 4)"`.
    /// An empty string or `"()"` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
        let cycles = parse_cycle_list(text, 1)?;
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (cycle, col) in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::Parse {
                        line: 1,
                        col,
                        msg: format!("point {p} outside domain of size {degree}"),
                    });
                }
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Perm(images))
    }
}

type CycleList = Vec<(Vec<usize>, usize)>;

/// Tokenizes one line of cycle notation, returning each cycle with its column.
fn parse_cycle_list(text: &str, line: usize) -> Result<CycleList> {
    let err = |col: usize, msg: String| Error::Parse { line, col, msg };
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut used: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c != '(' {
            return Err(err(i + 1, format!("expected '(' but found '{c}'")));
        }
        let open = i + 1;
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < chars.len() && (chars[i].is_whitespace() || chars[i] == ',') {
                i += 1;
            }
            if i >= chars.len() {
                return Err(err(open, "unterminated cycle".into()));
            }
            if chars[i] == ')' {
                i += 1;
                break;
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i + 1, format!("unexpected character '{}'", chars[i])));
            }
            let tok: String = chars[start..i].iter().collect();
            let p: usize = tok
                .parse()
                .map_err(|_| err(start + 1, format!("bad point '{tok}'")))?;
            if let Some(&(_, prev)) = used.iter().find(|(q, _)| *q == p) {
                return Err(err(
                    start + 1,
                    format!("point {p} repeated (first seen at column {prev})"),
                ));
            }
            used.push((p, start + 1));
            cycle.push(p);
        }
        if !cycle.is_empty() {
            out.push((cycle, open));
        }
    }
    Ok(out)
}

/// Parses a generator file: one permutation per line in cycle notation.
/// Blank lines denote the identity. Without an explicit degree the domain is
/// `max point + 1` over all lines.
pub fn parse_generators(text: &str, degree: Option<usize>) -> Result<Vec<Perm>> {
    let mut parsed = Vec::new();
    let mut max_point = None::<usize>;
    for (ln, line) in text.lines().enumerate() {
        let cycles = parse_cycle_list(line, ln + 1)?;
        for (c, _) in &cycles {
            for &p in c {
                max_point = Some(max_point.map_or(p, |m: usize| m.max(p)));
            }
        }
        parsed.push((ln + 1, cycles));
    }
    let n = degree.unwrap_or_else(|| max_point.map_or(0, |m| m + 1));
    let mut out = Vec::with_capacity(parsed.len());
    for (line, cycles) in parsed {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for (cycle, col) in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= n {
                    return Err(Error::Parse {
                        line,
                        col,
                        msg: format!("point {p} outside domain of size {n}"),
                    });
                }
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        out.push(Perm(images));
    }
    Ok(out)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Perm::parse_cycles("(0 1)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        // (a∘b)(1) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&b).to_string(), "(0 1 2)");
    }

    #[test]
    fn cycle_notation_roundtrip_and_identity() {
        let p = Perm::parse_cycles(" (0 1 2) (3 4)", 5).unwrap();
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(p.cycle_type(), vec![2, 3]);
        assert!(Perm::parse_cycles("", 4).unwrap().is_identity());
        assert!(Perm::parse_cycles("()", 4).unwrap().is_identity());
        assert_eq!(p.compose(&p.inverse()), Perm::identity(5));
    }

    #[test]
    fn repeated_point_is_rejected_with_position() {
        match Perm::parse_cycles("(0 1)(1 2)", 3) {
            Err(Error::Parse { line, col, msg }) => {
                assert_eq!((line, col), (1, 7));
                assert!(msg.contains("repeated"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(Perm::parse_cycles("(0 5)", 3).is_err());
        assert!(Perm::parse_cycles("(0 1", 3).is_err());
    }

    #[test]
    fn generator_file_with_blank_identity_line() {
        let gens = parse_generators("(0 1 2)\n\n(3 4)\n", None).unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0].degree(), 5);
        assert!(gens[1].is_identity());
        let err = parse_generators("(0 1)\n(2 2)", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, col: 4, .. }), "{err:?}");
    }
}
