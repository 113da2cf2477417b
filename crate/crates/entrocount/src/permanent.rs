//! Exact permanents of square (0,1)-matrices.
//!
//! The workhorse is Ryser's inclusion–exclusion formula
//! `per(A) = (-1)^n sum_{S subset of columns} (-1)^|S| prod_i sum_{j in S} a(i,j)`,
//! evaluated over the 2^n - 1 nonempty column subsets in Gray-code order so
//! each step updates the per-row restricted sums by a single column. A
//! literal sum over all n! permutations serves as the independent oracle for
//! small matrices, and row expansion into minors provides a third route.
//!
//! All arithmetic is exact: an `i128` accumulator up to n = 20 and a 256-bit
//! two's-complement accumulator beyond, since signed Ryser partial sums can
//! exceed 128 bits well before the permanent itself does.

use crate::error::{Error, Result};

/// Hard cap on Ryser evaluation (the subset loop costs 2^n).
pub const MAX_RYSER_DIMENSION: usize = 30;
/// Hard cap on the factorial-time brute-force oracle.
pub const MAX_BRUTEFORCE_DIMENSION: usize = 10;

/// A square (0,1)-matrix with rows stored as column bitmasks.
///
/// Bit `j` of `rows[i]` is `a(i,j)`; row sums are cached popcounts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    n: usize,
    rows: Vec<u64>,
    row_sums: Vec<usize>,
}

impl BinaryMatrix {
    /// Builds from row bitmasks. Bits at or beyond position `n` must be clear.
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("matrix dimension must be positive".into()));
        }
        if n > 64 {
            return Err(Error::Capacity(format!(
                "bitmask rows support dimension at most 64, got {n}"
            )));
        }
        if rows.len() != n {
            return Err(Error::Argument(format!(
                "{} rows provided for dimension {n}",
                rows.len()
            )));
        }
        let valid = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (i, &r) in rows.iter().enumerate() {
            if r & !valid != 0 {
                return Err(Error::Argument(format!(
                    "row {i} has bits set beyond column {}",
                    n - 1
                )));
            }
        }
        let row_sums = rows.iter().map(|r| r.count_ones() as usize).collect();
        Ok(Self { n, rows, row_sums })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, (0..n).map(|i| 1u64 << i).collect())
    }

    /// The all-ones matrix, whose permanent is n!.
    pub fn ones(n: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Argument(format!("dimension {n} unsupported")));
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self::new(n, vec![full; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row_sums(&self) -> &[usize] {
        &self.row_sums
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn has_zero_row(&self) -> bool {
        self.row_sums.contains(&0)
    }

    /// The submatrix with row `i` and column `j` removed; `n` must exceed 1.
    pub fn minor(&self, i: usize, j: usize) -> Result<Self> {
        if i >= self.n || j >= self.n {
            return Err(Error::Argument(format!(
                "minor index ({i}, {j}) out of range for dimension {}",
                self.n
            )));
        }
        if self.n == 1 {
            return Err(Error::Argument("a 1x1 matrix has no proper minor".into()));
        }
        let low = (1u64 << j) - 1;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != i)
            .map(|(_, &bits)| (bits & low) | ((bits >> (j + 1)) << j))
            .collect();
        Self::new(self.n - 1, rows)
    }

    /// Biadjacency matrix of a bipartite graph on vertex sets `{1..n}`;
    /// its permanent counts the perfect matchings.
    pub fn from_bipartite_graph(edges: &[(usize, usize)], n: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Ingestion(format!("vertex count {n} unsupported")));
        }
        let mut rows = vec![0u64; n];
        for &(left, right) in edges {
            if left == 0 || left > n || right == 0 || right > n {
                return Err(Error::Ingestion(format!(
                    "edge ({left}, {right}) out of range for vertex sets 1..={n}"
                )));
            }
            rows[left - 1] |= 1u64 << (right - 1);
        }
        Self::new(n, rows)
    }

    /// Parses the matrix text format: one row per line, either `n`
    /// whitespace-separated 0/1 tokens or one compact string of `n`
    /// characters. Ragged or non-square input is rejected.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows: Vec<u64> = Vec::new();
        let mut width: Option<usize> = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = if line.contains(char::is_whitespace) {
                line.split_whitespace().collect()
            } else {
                // Compact row: one character per column.
                line.split("").filter(|s| !s.is_empty()).collect()
            };
            let mut bits = 0u64;
            if tokens.len() > 64 {
                return Err(Error::Capacity(format!(
                    "line {}: rows of more than 64 columns unsupported",
                    lineno + 1
                )));
            }
            for (j, tok) in tokens.iter().enumerate() {
                match *tok {
                    "0" => {}
                    "1" => bits |= 1u64 << j,
                    other => {
                        return Err(Error::Ingestion(format!(
                            "line {}: expected 0 or 1, found {other:?}",
                            lineno + 1
                        )))
                    }
                }
            }
            match width {
                None => width = Some(tokens.len()),
                Some(w) if w != tokens.len() => {
                    return Err(Error::Ingestion(format!(
                        "line {}: {} columns, expected {w}",
                        lineno + 1,
                        tokens.len()
                    )))
                }
                _ => {}
            }
            rows.push(bits);
        }
        let n = rows.len();
        match width {
            None => Err(Error::Ingestion("matrix text is empty".into())),
            Some(w) if w != n => Err(Error::Ingestion(format!(
                "matrix is {n}x{w}, expected square"
            ))),
            _ => Self::new(n, rows),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &row in &self.rows {
            for j in 0..self.n {
                out.push(if row >> j & 1 == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

/// Signed 256-bit accumulator, two's complement over four little-endian limbs.
/// Wide enough for Ryser partial sums at n = 30 (below 2^185).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
struct I256 {
    limbs: [u64; 4],
}

impl I256 {
    fn add_assign(&mut self, other: &I256) {
        let mut carry = 0u64;
        for k in 0..4 {
            let (s1, c1) = self.limbs[k].overflowing_add(other.limbs[k]);
            let (s2, c2) = s1.overflowing_add(carry);
            self.limbs[k] = s2;
            carry = (c1 as u64) + (c2 as u64);
        }
    }

    fn negate(&mut self) {
        for l in &mut self.limbs {
            *l = !*l;
        }
        let one = I256 {
            limbs: [1, 0, 0, 0],
        };
        let mut tmp = *self;
        tmp.add_assign(&one);
        *self = tmp;
    }

    fn is_negative(&self) -> bool {
        self.limbs[3] >> 63 == 1
    }

    /// Unsigned product of small factors; each factor must fit in u64.
    fn product_of(factors: impl Iterator<Item = u64>) -> I256 {
        let mut limbs = [1u64, 0, 0, 0];
        for f in factors {
            let mut carry = 0u128;
            for l in &mut limbs {
                let wide = (*l as u128) * (f as u128) + carry;
                *l = wide as u64;
                carry = wide >> 64;
            }
            debug_assert_eq!(carry, 0, "product overflowed 256 bits");
        }
        I256 { limbs }
    }

    fn try_into_u128(mut self) -> Option<u128> {
        if self.is_negative() {
            return None;
        }
        if self.limbs[2] != 0 || self.limbs[3] != 0 {
            return None;
        }
        let lo = std::mem::take(&mut self.limbs[0]) as u128;
        Some(lo | (self.limbs[1] as u128) << 64)
    }
}

/// One Ryser partial sum: subset indices `lo..hi` within `1..2^n`.
///
/// The starting column-sum vector is rebuilt from the Gray code of `lo - 1`,
/// after which each index toggles a single column.
trait RyserAccumulator: Default + Send {
    fn accumulate(&mut self, sums: &[u32], negate: bool);
    fn merge(&mut self, other: Self);
    fn finish(self, n: usize) -> Result<u128>;
}

#[derive(Default)]
struct NarrowAcc(i128);

impl RyserAccumulator for NarrowAcc {
    fn accumulate(&mut self, sums: &[u32], negate: bool) {
        let mut prod: i128 = 1;
        for &s in sums {
            prod *= s as i128;
        }
        self.0 += if negate { -prod } else { prod };
    }

    fn merge(&mut self, other: Self) {
        self.0 += other.0;
    }

    fn finish(self, n: usize) -> Result<u128> {
        let signed = if n % 2 == 0 { self.0 } else { -self.0 };
        u128::try_from(signed)
            .map_err(|_| Error::Capacity("Ryser sum left a negative total".into()))
    }
}

#[derive(Default)]
struct WideAcc(I256);

impl RyserAccumulator for WideAcc {
    fn accumulate(&mut self, sums: &[u32], negate: bool) {
        let mut prod = I256::product_of(sums.iter().map(|&s| s as u64));
        if negate {
            prod.negate();
        }
        self.0.add_assign(&prod);
    }

    fn merge(&mut self, other: Self) {
        self.0.add_assign(&other.0);
    }

    fn finish(self, n: usize) -> Result<u128> {
        let mut total = self.0;
        if n % 2 == 1 {
            total.negate();
        }
        total
            .try_into_u128()
            .ok_or_else(|| Error::Capacity("Ryser sum exceeds 128 bits".into()))
    }
}

fn ryser_chunk<A: RyserAccumulator>(m: &BinaryMatrix, lo: u64, hi: u64) -> A {
    let n = m.n();
    let mut acc = A::default();

    // Restricted row sums for the subset preceding the chunk.
    let start_subset = (lo - 1) ^ ((lo - 1) >> 1);
    let mut sums = vec![0u32; n];
    let mut zero_rows = 0usize;
    for (i, &row) in m.rows().iter().enumerate() {
        sums[i] = (row & start_subset).count_ones();
        if sums[i] == 0 {
            zero_rows += 1;
        }
    }
    let mut odd_cardinality = start_subset.count_ones() % 2 == 1;

    for k in lo..hi {
        let j = k.trailing_zeros() as usize;
        let entering = (k ^ (k >> 1)) >> j & 1 == 1;
        for (i, &row) in m.rows().iter().enumerate() {
            if row >> j & 1 == 1 {
                if entering {
                    if sums[i] == 0 {
                        zero_rows -= 1;
                    }
                    sums[i] += 1;
                } else {
                    sums[i] -= 1;
                    if sums[i] == 0 {
                        zero_rows += 1;
                    }
                }
            }
        }
        odd_cardinality = !odd_cardinality;
        if zero_rows == 0 {
            acc.accumulate(&sums, odd_cardinality);
        }
    }
    acc
}

fn ryser_total<A: RyserAccumulator>(m: &BinaryMatrix, chunks: usize) -> Result<u128> {
    let n = m.n();
    let end = 1u64 << n; // exclusive upper bound on subset indices
    let chunks = chunks.clamp(1, (end - 1) as usize) as u64;
    let span = end - 1;

    let bounds: Vec<(u64, u64)> = (0..chunks)
        .map(|c| (1 + span * c / chunks, 1 + span * (c + 1) / chunks))
        .collect();

    let mut total = A::default();
    if chunks == 1 || n < 18 {
        for &(lo, hi) in &bounds {
            total.merge(ryser_chunk::<A>(m, lo, hi));
        }
    } else {
        // Chunks are independent; evaluate them on worker threads and merge
        // in chunk order so the result never depends on scheduling.
        let partials = std::thread::scope(|scope| {
            let handles: Vec<_> = bounds
                .iter()
                .map(|&(lo, hi)| scope.spawn(move || ryser_chunk::<A>(m, lo, hi)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("Ryser worker panicked"))
                .collect::<Vec<A>>()
        });
        for p in partials {
            total.merge(p);
        }
    }
    total.finish(n)
}

/// Exact permanent by Ryser's formula with Gray-code column updates.
pub fn permanent_ryser(m: &BinaryMatrix) -> Result<u128> {
    let default_chunks = if m.n() >= 22 {
        std::thread::available_parallelism().map_or(1, |p| p.get())
    } else {
        1
    };
    permanent_ryser_chunked(m, default_chunks)
}

/// As [`permanent_ryser`] with an explicit chunk count. The subset range is
/// split into contiguous chunks whose partial sums are added in chunk order,
/// so the value is identical for every chunk count.
pub fn permanent_ryser_chunked(m: &BinaryMatrix, chunks: usize) -> Result<u128> {
    let n = m.n();
    if n > MAX_RYSER_DIMENSION {
        return Err(Error::Capacity(format!(
            "Ryser evaluation capped at dimension {MAX_RYSER_DIMENSION}, got {n}"
        )));
    }
    if m.has_zero_row() {
        return Ok(0);
    }
    if n <= 20 {
        ryser_total::<NarrowAcc>(m, chunks)
    } else {
        ryser_total::<WideAcc>(m, chunks)
    }
}

/// Independent oracle: literal sum over all n! permutations.
pub fn permanent_bruteforce(m: &BinaryMatrix) -> Result<u128> {
    let n = m.n();
    if n > MAX_BRUTEFORCE_DIMENSION {
        return Err(Error::Capacity(format!(
            "brute-force enumeration capped at dimension {MAX_BRUTEFORCE_DIMENSION}, got {n}"
        )));
    }
    fn descend(m: &BinaryMatrix, row: usize, used: u64, partial: u64, total: &mut u128) {
        if row == m.n() {
            *total += partial as u128;
            return;
        }
        for j in 0..m.n() {
            if used >> j & 1 == 0 {
                let entry = m.rows()[row] >> j & 1;
                descend(m, row + 1, used | 1 << j, partial * entry, total);
            }
        }
    }
    let mut total = 0u128;
    descend(m, 0, 0, 1, &mut total);
    Ok(total)
}

/// Expansion along row `i` (0-based): the sum of minor permanents over that
/// row's ones. Equals the permanent of the whole matrix.
pub fn expand_minor(m: &BinaryMatrix, i: usize) -> Result<u128> {
    let n = m.n();
    if i >= n {
        return Err(Error::Argument(format!(
            "row {i} out of range for dimension {n}"
        )));
    }
    let mut total = 0u128;
    for j in 0..n {
        if !m.get(i, j) {
            continue;
        }
        total += if n == 1 {
            1 // the empty minor has permanent 1
        } else {
            permanent_ryser(&m.minor(i, j)?)?
        };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Identity matrix with the first row filled with ones; permanent 1.
    fn first_row_ones(n: usize) -> BinaryMatrix {
        let full = (1u64 << n) - 1;
        let mut rows = vec![full];
        rows.extend((1..n).map(|i| 1u64 << i));
        BinaryMatrix::new(n, rows).unwrap()
    }

    #[test]
    fn identity_has_permanent_one() {
        for n in [1usize, 2, 5, 9, 15] {
            let m = BinaryMatrix::identity(n).unwrap();
            assert_eq!(permanent_ryser(&m).unwrap(), 1);
        }
    }

    #[test]
    fn all_ones_permanent_is_factorial() {
        assert_eq!(permanent_ryser(&BinaryMatrix::ones(3).unwrap()).unwrap(), 6);
        assert_eq!(
            permanent_ryser(&BinaryMatrix::ones(4).unwrap()).unwrap(),
            24
        );
        assert_eq!(
            permanent_bruteforce(&BinaryMatrix::ones(4).unwrap()).unwrap(),
            24
        );
    }

    #[test]
    fn first_row_ones_matrix_has_permanent_one() {
        for n in 2..=8 {
            let m = first_row_ones(n);
            assert_eq!(permanent_ryser(&m).unwrap(), 1, "n={n}");
            assert_eq!(permanent_bruteforce(&m).unwrap(), 1, "n={n}");
        }
    }

    #[test]
    fn zero_row_forces_zero_permanent() {
        let m = BinaryMatrix::new(3, vec![0b111, 0b000, 0b101]).unwrap();
        assert_eq!(permanent_ryser(&m).unwrap(), 0);
        assert_eq!(permanent_bruteforce(&m).unwrap(), 0);
    }

    #[test]
    fn expansion_along_any_row_matches_permanent() {
        assert_eq!(
            expand_minor(&BinaryMatrix::identity(3).unwrap(), 0).unwrap(),
            1
        );
        for i in 0..3 {
            assert_eq!(expand_minor(&BinaryMatrix::ones(3).unwrap(), i).unwrap(), 6);
        }
        assert_eq!(expand_minor(&first_row_ones(4), 0).unwrap(), 1);
        assert_eq!(
            expand_minor(&BinaryMatrix::identity(1).unwrap(), 0).unwrap(),
            1
        );
        assert!(expand_minor(&BinaryMatrix::identity(2).unwrap(), 2).is_err());
    }

    #[test]
    fn capacity_limits_are_enforced() {
        let too_big = BinaryMatrix::identity(31).unwrap();
        assert!(matches!(permanent_ryser(&too_big), Err(Error::Capacity(_))));
        let m = BinaryMatrix::identity(11).unwrap();
        assert!(matches!(permanent_bruteforce(&m), Err(Error::Capacity(_))));
    }

    #[test]
    fn bipartite_ingestion() {
        let id = BinaryMatrix::from_bipartite_graph(&[(1, 1), (2, 2), (3, 3)], 3).unwrap();
        assert_eq!(id, BinaryMatrix::identity(3).unwrap());
        assert_eq!(permanent_ryser(&id).unwrap(), 1);

        // Complete bipartite graph on 3 + 3 vertices.
        let mut edges = Vec::new();
        for l in 1..=3 {
            for r in 1..=3 {
                edges.push((l, r));
            }
        }
        let k33 = BinaryMatrix::from_bipartite_graph(&edges, 3).unwrap();
        assert_eq!(permanent_ryser(&k33).unwrap(), 6);

        // Six-cycle: each left vertex adjacent to two rights; two matchings.
        let cycle = BinaryMatrix::from_bipartite_graph(
            &[(1, 1), (1, 3), (2, 1), (2, 2), (3, 2), (3, 3)],
            3,
        )
        .unwrap();
        assert_eq!(permanent_ryser(&cycle).unwrap(), 2);
        assert_eq!(permanent_bruteforce(&cycle).unwrap(), 2);

        assert!(BinaryMatrix::from_bipartite_graph(&[(0, 1)], 3).is_err());
        assert!(BinaryMatrix::from_bipartite_graph(&[(1, 4)], 3).is_err());
    }

    #[test]
    fn text_parsing_accepts_both_row_styles() {
        let spaced = BinaryMatrix::from_text("1 0 1\n0 1 0\n1 1 1\n").unwrap();
        let compact = BinaryMatrix::from_text("101\n010\n111").unwrap();
        assert_eq!(spaced, compact);
        assert_eq!(spaced.row_sums(), &[2, 1, 3]);

        assert!(BinaryMatrix::from_text("10\n1").is_err()); // ragged
        assert!(BinaryMatrix::from_text("12\n01").is_err()); // bad digit
        assert!(BinaryMatrix::from_text("101\n010").is_err()); // non-square
        assert!(BinaryMatrix::from_text("").is_err());

        let round = BinaryMatrix::from_text(&spaced.to_text()).unwrap();
        assert_eq!(round, spaced);
    }

    #[test]
    fn row_sums_track_popcounts() {
        let m = BinaryMatrix::from_text("110\n011\n111").unwrap();
        assert_eq!(m.row_sums(), &[2, 2, 3]);
        assert!(!m.has_zero_row());
        assert!(m.get(0, 0));
        assert!(!m.get(0, 2));
    }

    #[test]
    fn chunked_evaluation_is_chunk_count_independent() {
        let m = BinaryMatrix::from_text("1101\n0111\n1010\n1111").unwrap();
        let reference = permanent_ryser_chunked(&m, 1).unwrap();
        for chunks in [2usize, 3, 5, 8, 100] {
            assert_eq!(permanent_ryser_chunked(&m, chunks).unwrap(), reference);
        }
    }

    #[test]
    fn oracle_agreement_is_exhaustive_up_to_dimension_3() {
        for n in 1..=3usize {
            let cells = n * n;
            for bits in 0u32..1 << cells {
                let rows: Vec<u64> = (0..n)
                    .map(|i| (bits >> (n * i)) as u64 & ((1 << n) - 1))
                    .collect();
                let m = BinaryMatrix::new(n, rows).unwrap();
                let ryser = permanent_ryser(&m).unwrap();
                assert_eq!(ryser, permanent_bruteforce(&m).unwrap(), "{}", m.to_text());
                for i in 0..n {
                    assert_eq!(expand_minor(&m, i).unwrap(), ryser, "{}", m.to_text());
                }
            }
        }
    }

    #[test]
    fn threaded_chunks_match_the_sequential_sum() {
        // Dimension 18 with several chunks takes the worker-thread path.
        let mut rows = vec![(1u64 << 18) - 1; 2];
        rows.extend((2..18).map(|i| (1u64 << i) | 1));
        let m = BinaryMatrix::new(18, rows).unwrap();
        let sequential = permanent_ryser_chunked(&m, 1).unwrap();
        for chunks in [2usize, 4, 7] {
            assert_eq!(permanent_ryser_chunked(&m, chunks).unwrap(), sequential);
        }
    }

    #[test]
    fn wide_accumulator_path_agrees_with_narrow() {
        // Dense 21x21 matrix exercises the 256-bit path; compare against the
        // known value per(J_n) = n! minus nothing (all-ones) and a crafted
        // near-identity case with permanent 1.
        let ones = BinaryMatrix::ones(21).unwrap();
        let fact21: u128 = (1..=21u128).product();
        assert_eq!(permanent_ryser(&ones).unwrap(), fact21);
        let star = first_row_ones(21);
        assert_eq!(permanent_ryser(&star).unwrap(), 1);
    }

    #[test]
    fn wide_integer_arithmetic() {
        let a = I256::product_of([u64::MAX, u64::MAX, 5].into_iter());
        let mut b = a;
        b.negate();
        assert!(b.is_negative());
        b.add_assign(&a);
        assert_eq!(b, I256::default());
        assert_eq!(
            I256::product_of([3, 7].into_iter()).try_into_u128(),
            Some(21)
        );
        let mut neg = I256::product_of([1].into_iter());
        neg.negate();
        assert_eq!(neg.try_into_u128(), None);
    }

    fn arbitrary_matrix(max_n: usize) -> impl Strategy<Value = BinaryMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0u64..(1 << n), n)
                .prop_map(move |rows| BinaryMatrix::new(n, rows).unwrap())
        })
    }

    proptest! {
        #[test]
        fn ryser_matches_bruteforce(m in arbitrary_matrix(6)) {
            prop_assert_eq!(
                permanent_ryser(&m).unwrap(),
                permanent_bruteforce(&m).unwrap()
            );
        }

        #[test]
        fn expansion_is_consistent_on_every_row(m in arbitrary_matrix(5)) {
            let per = permanent_ryser(&m).unwrap();
            for i in 0..m.n() {
                prop_assert_eq!(expand_minor(&m, i).unwrap(), per);
            }
        }

        #[test]
        fn permanent_is_permutation_invariant(
            m in arbitrary_matrix(6),
            seed in 0u64..1000,
        ) {
            // Derive row/column permutations from the seed.
            let n = m.n();
            let mut order: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (s >> 33) as usize % (i + 1));
            }
            // Permute rows by `order`, columns by the reversed order.
            let permuted_rows: Vec<u64> = order
                .iter()
                .map(|&i| {
                    let mut bits = 0u64;
                    for j in 0..n {
                        if m.rows()[i] >> j & 1 == 1 {
                            bits |= 1 << order[n - 1 - j];
                        }
                    }
                    bits
                })
                .collect();
            let pm = BinaryMatrix::new(n, permuted_rows).unwrap();
            prop_assert_eq!(
                permanent_ryser(&m).unwrap(),
                permanent_ryser(&pm).unwrap()
            );
        }
    }
}
