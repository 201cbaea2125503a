//! Generated matplotlib scripts. The CLI never renders images itself; it
//! writes a small Python script next to the data file so figures stay
//! reproducible from the shipped data alone. Scripts locate the data file
//! relative to their own directory.

use crate::serialize::Format;

/// What a heatmap script is visualizing; difference maps get a diverging
/// palette centred on zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeatmapKind {
    Grid,
    Diff,
}

fn loader(data_file: &str, format: Format, value_key: &str) -> String {
    match format {
        Format::Csv => format!(
            r#"here = os.path.dirname(os.path.abspath(__file__))
data = np.loadtxt(os.path.join(here, {data_file:?}), delimiter=",", skiprows=1)
e, t, v = data[:, 0], data[:, 1], data[:, 2]
n_e, n_t = np.unique(e).size, np.unique(t).size
E, T, V = (a.reshape(n_e, n_t) for a in (e, t, v))
"#
        ),
        Format::Json => format!(
            r#"here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, {data_file:?})) as f:
    doc = json.load(f)
e_axis = np.array(doc["axes"]["e_over_omega"])
t_axis = np.array(doc["axes"]["omega_t"])
n_e, n_t = e_axis.size, t_axis.size
T, E = np.meshgrid(t_axis, e_axis)
V = np.array(doc["{value_key}"]).reshape(n_e, n_t)
"#
        ),
    }
}

pub fn heatmap_script(
    data_file: &str,
    format: Format,
    kind: HeatmapKind,
    title: &str,
    out_png: &str,
) -> String {
    let imports = match format {
        Format::Csv => "import os\nimport numpy as np\nimport matplotlib.pyplot as plt\n",
        Format::Json => "import json\nimport os\nimport numpy as np\nimport matplotlib.pyplot as plt\n",
    };
    let load = loader(data_file, format, "values");
    let (mesh, label) = match kind {
        HeatmapKind::Grid => (
            "mesh = plt.pcolormesh(T, E, V, shading=\"nearest\", cmap=\"viridis\")".to_string(),
            "C/g",
        ),
        HeatmapKind::Diff => (
            "lim = np.abs(V).max() or 1.0\n\
             mesh = plt.pcolormesh(T, E, V, shading=\"nearest\", cmap=\"RdBu_r\", vmin=-lim, vmax=lim)"
                .to_string(),
            "\u{0394}C/g",
        ),
    };
    format!(
        r#"#!/usr/bin/env python3
{imports}
{load}
plt.figure(figsize=(6.4, 4.8))
{mesh}
plt.colorbar(mesh, label="{label}")
plt.xlabel("$\Omega T$")
plt.ylabel("$E/\Omega$")
plt.title({title:?})
plt.tight_layout()
plt.savefig(os.path.join(here, {out_png:?}), dpi=150)
plt.show()
"#
    )
}

pub fn curve_script(data_file: &str, format: Format, tags: &[String], title: &str, out_png: &str) -> String {
    let imports = match format {
        Format::Csv => "import os\nimport numpy as np\nimport matplotlib.pyplot as plt\n",
        Format::Json => "import json\nimport os\nimport numpy as np\nimport matplotlib.pyplot as plt\n",
    };
    let tags_py = tags
        .iter()
        .map(|t| format!("{t:?}"))
        .collect::<Vec<_>>()
        .join(", ");
    let load = match format {
        Format::Csv => format!(
            r#"here = os.path.dirname(os.path.abspath(__file__))
data = np.loadtxt(os.path.join(here, {data_file:?}), delimiter=",", skiprows=1)
x = data[:, 0]
columns = data[:, 1:]
"#
        ),
        Format::Json => format!(
            r#"here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, {data_file:?})) as f:
    doc = json.load(f)
x = np.array(doc["omega_t"])
columns = np.array(doc["values"]).reshape(x.size, len(tags))
"#
        ),
    };
    format!(
        r#"#!/usr/bin/env python3
{imports}
tags = [{tags_py}]
{load}
plt.figure(figsize=(6.4, 4.8))
for k, tag in enumerate(tags):
    plt.plot(x, columns[:, k], label=tag)
plt.xlabel("$\Omega T$")
plt.ylabel("C/g")
plt.title({title:?})
plt.legend()
plt.tight_layout()
plt.savefig(os.path.join(here, {out_png:?}), dpi=150)
plt.show()
"#
    )
}
