use super::Partition;

/// A semistandard Young tableau: rows weakly increasing, columns strictly
/// increasing. Entries are letters `1..=content.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    content: Vec<usize>,
}

impl Tableau {
    /// Builds a tableau from explicit rows, checking semistandardness.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).ok()?;
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        let mut content = vec![0; max];
        for &x in rows.iter().flatten() {
            if x == 0 {
                return None;
            }
            content[x - 1] += 1;
        }
        let t = Tableau {
            shape,
            rows,
            content,
        };
        t.is_semistandard().then_some(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Multiplicity of each letter, indexed from letter 1.
    pub fn content(&self) -> &[usize] {
        &self.content
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| below > above)
        });
        rows_ok && cols_ok
    }

    /// Row reading word, bottom row first, each row left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// All semistandard tableaux of `shape` whose content is `content` (any
/// composition, zeros allowed). Letter `i+1` occurs `content[i]` times.
///
/// Tableaux are built letter by letter as a chain of horizontal strips; the
/// output order is deterministic.
pub fn enumerate_ssyt(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.iter().sum::<usize>() {
        return out;
    }
    let mut rows = vec![Vec::new(); shape.len()];
    let inner = vec![0; shape.len()];
    place_letter(shape, content, 0, &inner, &mut rows, &mut out);
    out
}

fn place_letter(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    inner: &[usize],
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if letter == content.len() {
        if inner == shape.parts() {
            out.push(Tableau {
                shape: shape.clone(),
                rows: rows.clone(),
                content: content.to_vec(),
            });
        }
        return;
    }
    let mut outer = inner.to_vec();
    add_strip(
        shape,
        content,
        letter,
        inner,
        0,
        content[letter],
        &mut outer,
        rows,
        out,
    );
}

// Extends `inner` to `outer` by a horizontal strip of `remaining` cells, row by
// row. A horizontal strip may grow row `r` at most up to the old length of row
// `r - 1`.
#[allow(clippy::too_many_arguments)]
fn add_strip(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    inner: &[usize],
    row: usize,
    remaining: usize,
    outer: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if row == inner.len() {
        if remaining == 0 {
            let snapshot = outer.clone();
            place_letter(shape, content, letter + 1, &snapshot, rows, out);
        }
        return;
    }
    let cap = if row == 0 {
        shape.part(0)
    } else {
        shape.part(row).min(inner[row - 1])
    };
    let lo = inner[row];
    let hi = cap.min(lo + remaining);
    for len in (lo..=hi).rev() {
        let added = len - lo;
        outer[row] = len;
        rows[row].extend(std::iter::repeat_n(letter + 1, added));
        add_strip(
            shape,
            content,
            letter,
            inner,
            row + 1,
            remaining - added,
            outer,
            rows,
            out,
        );
        rows[row].truncate(lo);
    }
    outer[row] = lo;
}

/// Number of semistandard tableaux of `shape` and content `content`.
pub fn kostka_number(shape: &Partition, content: &[usize]) -> u64 {
    // Symmetric in the content; the sorted content prunes the strip search.
    let sorted = Partition::from_unsorted(content.to_vec());
    enumerate_ssyt(shape, sorted.parts()).len() as u64
}
