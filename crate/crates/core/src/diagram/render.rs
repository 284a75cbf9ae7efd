use super::LineDiagram;
use std::collections::BTreeSet;
use std::fmt::Write;

fn node_name(label: i32) -> String {
    if label < 0 {
        format!("vm{}", -label)
    } else {
        format!("v{label}")
    }
}

impl LineDiagram {
    /// A fixed-width grid, top row first.
    ///
    /// Horizontal arrows are drawn as `<---` between neighbouring vertices of
    /// a row; all other arrows are listed on a trailing `diagonals:` line.
    pub fn render_text(&self) -> String {
        if self.vertices.is_empty() {
            return String::new();
        }
        let width = self
            .vertices
            .iter()
            .map(|v| v.label.to_string().len())
            .max()
            .unwrap_or(1);
        let min_col = self.vertices.iter().map(|v| v.col).min().unwrap_or(0);
        let max_col = self.vertices.iter().map(|v| v.col).max().unwrap_or(0);

        let mut horizontal = BTreeSet::new();
        let mut diagonal = Vec::new();
        for &(s, t) in &self.arrows {
            let (vs, vt) = (self.vertex(s).unwrap(), self.vertex(t).unwrap());
            if vs.row == vt.row {
                horizontal.insert((vs.row, vt.col, vs.col));
            } else {
                diagonal.push((s, t));
            }
        }

        let pitch = width + 5;
        let mut out = String::new();
        for row in self.rows() {
            let mut line = vec![' '; (max_col - min_col) as usize * pitch + width];
            for &(r, to, from) in &horizontal {
                if r != row {
                    continue;
                }
                let start = (to - min_col) as usize * pitch + width + 1;
                let end = (from - min_col) as usize * pitch - 1;
                line[start] = '<';
                line[start + 1..end].fill('-');
            }
            for v in self.vertices.iter().filter(|v| v.row == row) {
                let cell = format!("{:>width$}", v.label);
                let at = (v.col - min_col) as usize * pitch;
                for (k, ch) in cell.chars().enumerate() {
                    line[at + k] = ch;
                }
            }
            let line: String = line.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        if !diagonal.is_empty() {
            let list: Vec<String> = diagonal.iter().map(|(s, t)| format!("{s} -> {t}")).collect();
            writeln!(out, "diagonals: {}", list.join(", ")).unwrap();
        }
        out
    }

    /// Graphviz source; each vertex is pinned at its grid position and the
    /// vertices of a row share a rank.
    pub fn render_dot(&self) -> String {
        let mut out = String::from("digraph D {\n  node [shape=plaintext];\n");
        for v in &self.vertices {
            writeln!(
                out,
                "  {} [label=\"{}\", pos=\"{},{}!\"];",
                node_name(v.label),
                v.label,
                v.col,
                v.row
            )
            .unwrap();
        }
        for row in self.rows() {
            let names: Vec<String> = self.row_labels(row).into_iter().map(node_name).collect();
            writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
        }
        for &(s, t) in &self.arrows {
            writeln!(out, "  {} -> {};", node_name(s), node_name(t)).unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serialization cannot fail")
    }
}
