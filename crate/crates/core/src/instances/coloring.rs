//! Proper edge coloring with at most `max_degree + 1` colors
//! (Misra and Gries).

use super::vc::UGraph;

const NONE: usize = usize::MAX;

struct Palette {
    /// `at[v][c]`: neighbor joined to `v` by an edge of color `c`.
    at: Vec<Vec<usize>>,
    colors: usize,
}

impl Palette {
    fn color_of(&self, u: usize, w: usize) -> Option<usize> {
        (1..=self.colors).find(|&c| self.at[u][c] == w)
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c] == NONE
    }

    fn free(&self, v: usize) -> usize {
        (1..=self.colors)
            .find(|&c| self.is_free(v, c))
            .expect("degree + 1 colors leave one free")
    }

    fn set(&mut self, u: usize, w: usize, c: usize) {
        self.at[u][c] = w;
        self.at[w][c] = u;
    }

    fn unset(&mut self, u: usize, w: usize, c: usize) {
        self.at[u][c] = NONE;
        self.at[w][c] = NONE;
    }

    /// Swaps colors `c` and `d` along the maximal path from `u` that starts
    /// with a `d` edge.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut x, mut want) = (u, d);
        while self.at[x][want] != NONE {
            let y = self.at[x][want];
            path.push((x, y, want));
            x = y;
            want = if want == d { c } else { d };
        }
        for &(a, b, col) in &path {
            self.unset(a, b, col);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == d { c } else { d });
        }
    }

    fn is_fan(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| match self.color_of(u, w[1]) {
            Some(col) => self.is_free(w[0], col),
            None => false,
        })
    }
}

/// Colors every edge of `g` with a color in `1..=max_degree + 1` so that
/// edges sharing a vertex differ. Returns one color per edge index.
pub fn edge_color(g: &UGraph) -> Vec<usize> {
    let colors = g.max_degree() + 1;
    let mut p = Palette {
        at: vec![vec![NONE; colors + 1]; g.n()],
        colors,
    };
    for &(u, v) in g.edges() {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = (1..=colors).find_map(|c| {
                let x = p.at[u][c];
                (x != NONE && p.is_free(last, c) && !fan.contains(&x)).then_some(x)
            });
            match next {
                Some(x) => fan.push(x),
                None => break,
            }
        }
        let c = p.free(u);
        let d = p.free(*fan.last().unwrap());
        p.invert_path(u, c, d);
        let end = (0..fan.len())
            .find(|&i| p.is_free(fan[i], d) && p.is_fan(u, &fan[..=i]))
            .expect("a fan prefix ends at a vertex missing d");
        // Rotate the fan prefix: each edge takes the color of the next one.
        let shifted: Vec<usize> = (0..end)
            .map(|j| p.color_of(u, fan[j + 1]).unwrap())
            .collect();
        for j in 0..end {
            p.unset(u, fan[j + 1], shifted[j]);
        }
        for j in 0..end {
            p.set(u, fan[j], shifted[j]);
        }
        p.set(u, fan[end], d);
    }
    g.edges()
        .iter()
        .map(|&(u, v)| p.color_of(u, v).expect("every edge colored"))
        .collect()
}

/// Whether `colors` assigns distinct colors to edges sharing a vertex.
pub fn is_proper_coloring(g: &UGraph, colors: &[usize]) -> bool {
    if colors.len() != g.m() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    g.edges()
        .iter()
        .zip(colors)
        .all(|(&(u, v), &c)| c > 0 && seen.insert((u, c)) && seen.insert((v, c)))
}
