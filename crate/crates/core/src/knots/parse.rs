use super::{Crossing, KnotDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    X,
    Open,
    Close,
    Comma,
    Semi,
    Num(usize),
}

#[derive(Clone, Copy, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (l, col) = (li + 1, i + 1);
            let tok = match c {
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                'X' | 'x' => Tok::X,
                '[' => Tok::Open,
                ']' => Tok::Close,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    let n = digits.parse().map_err(|_| perr(l, col, "arc label too large"))?;
                    out.push(Spanned {
                        tok: Tok::Num(n),
                        line: l,
                        col,
                    });
                    continue;
                }
                other => return Err(perr(l, col, format!("unexpected character {other:?}"))),
            };
            out.push(Spanned { tok, line: l, col });
            i += 1;
        }
    }
    Ok(out)
}

struct RawCrossing {
    labels: [usize; 4],
    line: usize,
    col: usize,
}

fn parse_crossings(text: &str) -> Result<Vec<RawCrossing>> {
    let toks = tokenize(text)?;
    let end = toks.last().map(|t| (t.line, t.col + 1)).unwrap_or((1, 1));
    let mut it = toks.into_iter().peekable();
    let mut out = Vec::new();
    let expect = |t: Option<Spanned>, want: Tok, what: &str| -> Result<Spanned> {
        match t {
            Some(s) if s.tok == want => Ok(s),
            Some(s) => Err(perr(s.line, s.col, format!("expected {what}"))),
            None => Err(perr(end.0, end.1, format!("expected {what} before end of input"))),
        }
    };
    while it.peek().is_some() {
        let head = expect(it.next(), Tok::X, "'X'")?;
        expect(it.next(), Tok::Open, "'['")?;
        let mut labels = [0usize; 4];
        for (k, slot) in labels.iter_mut().enumerate() {
            match it.next() {
                Some(Spanned { tok: Tok::Num(0), line, col }) => {
                    return Err(perr(line, col, "arc labels start at 1"))
                }
                Some(Spanned { tok: Tok::Num(n), .. }) => *slot = n - 1,
                Some(s) => return Err(perr(s.line, s.col, "expected an arc label")),
                None => return Err(perr(end.0, end.1, "unterminated crossing")),
            }
            if k < 3 {
                expect(it.next(), Tok::Comma, "','")?;
            }
        }
        expect(it.next(), Tok::Close, "']'")?;
        out.push(RawCrossing {
            labels,
            line: head.line,
            col: head.col,
        });
        if let Some(s) = it.peek() {
            if s.tok == Tok::Semi {
                it.next();
            } else {
                return Err(perr(s.line, s.col, "expected ';' between crossings"));
            }
        }
    }
    if out.is_empty() {
        return Err(perr(end.0, end.1, "no crossings"));
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Unknown,
    In,
    Out,
}

/// Parses a planar-diagram code `X[a,b,c,d]; …` with 1-based labels. `a` is
/// the incoming and `c` the outgoing under-arc; `b`, `d` are the over-arcs.
/// The over direction is inferred from orientation consistency around the
/// diagram, falling back to the rule that labels increase by one along the
/// strand. A crossing is positive when the over-strand runs from `d` to `b`.
pub fn parse_pd(text: &str) -> Result<KnotDiagram> {
    let raw = parse_crossings(text)?;
    let m = raw.iter().flat_map(|c| c.labels).max().map_or(0, |x| x + 1);
    let mut count = vec![0usize; m];
    for c in &raw {
        for &l in &c.labels {
            count[l] += 1;
        }
    }
    let missing: Vec<usize> = (0..m).filter(|&l| count[l] < 2).map(|l| l + 1).collect();
    let duplicated: Vec<usize> = (0..m).filter(|&l| count[l] > 2).map(|l| l + 1).collect();
    if !missing.is_empty() || !duplicated.is_empty() {
        return Err(Error::InconsistentArcs { missing, duplicated });
    }

    // appearances of each label as (crossing, slot)
    let mut seen: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (i, c) in raw.iter().enumerate() {
        for (s, &l) in c.labels.iter().enumerate() {
            seen[l].push((i, s));
        }
    }
    let mut dir = vec![[Dir::In, Dir::Unknown, Dir::Out, Dir::Unknown]; raw.len()];
    let conflict = |l: usize| Error::InconsistentArcs {
        missing: Vec::new(),
        duplicated: vec![l + 1],
    };
    let propagate = |dir: &mut Vec<[Dir; 4]>| -> Result<()> {
        loop {
            let mut changed = false;
            for (l, apps) in seen.iter().enumerate() {
                let [(c0, s0), (c1, s1)] = [apps[0], apps[1]];
                match (dir[c0][s0], dir[c1][s1]) {
                    (Dir::Unknown, Dir::Unknown) => {}
                    (Dir::Unknown, d) => {
                        dir[c0][s0] = flip(d);
                        changed = true;
                    }
                    (d, Dir::Unknown) => {
                        dir[c1][s1] = flip(d);
                        changed = true;
                    }
                    (a, b) if a == b => return Err(conflict(l)),
                    _ => {}
                }
            }
            for (i, d) in dir.iter_mut().enumerate() {
                match (d[1], d[3]) {
                    (Dir::Unknown, Dir::Unknown) => {}
                    (Dir::Unknown, x) => {
                        d[1] = flip(x);
                        changed = true;
                    }
                    (x, Dir::Unknown) => {
                        d[3] = flip(x);
                        changed = true;
                    }
                    (a, b) if a == b => return Err(conflict(raw[i].labels[1])),
                    _ => {}
                }
            }
            if !changed {
                return Ok(());
            }
        }
    };
    propagate(&mut dir)?;
    while let Some(i) = dir.iter().position(|d| d[1] == Dir::Unknown) {
        let [_, b, _, d] = raw[i].labels;
        let forward = (d + 1) % m == b;
        let backward = (b + 1) % m == d;
        if forward == backward {
            return Err(perr(
                raw[i].line,
                raw[i].col,
                "cannot infer the over-strand direction of this crossing",
            ));
        }
        dir[i][1] = if forward { Dir::Out } else { Dir::In };
        dir[i][3] = flip(dir[i][1]);
        propagate(&mut dir)?;
    }

    let crossings = raw
        .iter()
        .zip(&dir)
        .map(|(c, d)| {
            let [a, b, cc, dd] = c.labels;
            let (over_in, over_out, sign) = if d[3] == Dir::In { (dd, b, 1) } else { (b, dd, -1) };
            Crossing {
                over_in,
                over_out,
                under_in: a,
                under_out: cc,
                sign,
            }
        })
        .collect();
    KnotDiagram::new(m, crossings)
}

fn flip(d: Dir) -> Dir {
    match d {
        Dir::In => Dir::Out,
        Dir::Out => Dir::In,
        Dir::Unknown => Dir::Unknown,
    }
}

/// The closure of a braid word such as `"s1 s2' s1"` on `strands` strands.
/// `s_i` crosses strands `i` and `i+1` with the left one passing over and
/// counts as a positive crossing; `s_i'` is its inverse.
pub fn parse_braid(word: &str, strands: usize) -> Result<KnotDiagram> {
    if strands == 0 {
        return Err(perr(1, 1, "a braid needs at least one strand"));
    }
    let mut letters = Vec::new();
    let mut col = 1;
    for piece in word.split_inclusive(char::is_whitespace) {
        let tok = piece.trim();
        if !tok.is_empty() {
            let (body, inverse) = match tok.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let idx: usize = body
                .strip_prefix(['s', 'S'])
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| perr(1, col, format!("bad braid generator {tok:?}")))?;
            if idx == 0 || idx >= strands {
                return Err(perr(
                    1,
                    col,
                    format!("generator s{idx} out of range for {strands} strands"),
                ));
            }
            letters.push((idx - 1, inverse));
        }
        col += piece.chars().count();
    }

    let mut pos: Vec<usize> = (0..strands).collect();
    let mut next_arc = strands;
    let mut crossings = Vec::new();
    for (i, inverse) in letters {
        let (left, right) = (pos[i], pos[i + 1]);
        let (new_left, new_right) = (next_arc, next_arc + 1);
        next_arc += 2;
        // the left strand moves to the right and vice versa
        let crossing = if inverse {
            Crossing {
                over_in: right,
                over_out: new_left,
                under_in: left,
                under_out: new_right,
                sign: -1,
            }
        } else {
            Crossing {
                over_in: left,
                over_out: new_right,
                under_in: right,
                under_out: new_left,
                sign: 1,
            }
        };
        crossings.push(crossing);
        pos[i] = new_left;
        pos[i + 1] = new_right;
    }

    // glue the bottom of each position to its top, then renumber
    let mut rename: Vec<usize> = (0..next_arc).collect();
    for (p, &end) in pos.iter().enumerate() {
        rename[end] = p;
    }
    let mut compact = vec![usize::MAX; next_arc];
    let mut used = 0;
    for &r in &rename[..next_arc] {
        if compact[r] == usize::MAX {
            compact[r] = used;
            used += 1;
        }
    }
    let f = |a: usize| compact[rename[a]];
    let crossings = crossings
        .into_iter()
        .map(|c| Crossing {
            over_in: f(c.over_in),
            over_out: f(c.over_out),
            under_in: f(c.under_in),
            under_out: f(c.under_out),
            sign: c.sign,
        })
        .collect();
    KnotDiagram::new(used, crossings)
}
