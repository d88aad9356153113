//! Published rejection rates for the eight simulation tables.
//!
//! Layout: `[γ index][n index][H index * 3 + parameter index]` over
//! [`GAMMAS`], [`SAMPLE_SIZES`], [`HURSTS`] and the table's parameters.

pub const GAMMAS: [f64; 3] = [0.4, 0.5, 0.6];
pub const SAMPLE_SIZES: [usize; 4] = [100, 300, 500, 1000];
pub const HURSTS: [f64; 4] = [0.6, 0.7, 0.8, 0.9];

pub type TableValues = [[[f64; 12]; 4]; 3];

#[rustfmt::skip]
pub const TABLE_1: TableValues = [
    [
        [0.131, 0.713, 0.999, 0.175, 0.745, 0.997, 0.099, 0.492, 0.971, 0.024, 0.117, 0.558],
        [0.095, 0.984, 1.000, 0.161, 0.977, 1.000, 0.084, 0.824, 1.000, 0.017, 0.205, 0.901],
        [0.089, 1.000, 1.000, 0.148, 0.998, 1.000, 0.072, 0.939, 1.000, 0.015, 0.292, 0.974],
        [0.081, 1.000, 1.000, 0.131, 1.000, 1.000, 0.065, 0.996, 1.000, 0.012, 0.460, 0.998],
    ],
    [
        [0.116, 0.689, 0.998, 0.155, 0.706, 0.996, 0.095, 0.474, 0.965, 0.034, 0.145, 0.620],
        [0.089, 0.979, 1.000, 0.125, 0.969, 1.000, 0.075, 0.807, 1.000, 0.023, 0.262, 0.926],
        [0.084, 0.999, 1.000, 0.126, 0.998, 1.000, 0.066, 0.931, 1.000, 0.021, 0.337, 0.981],
        [0.073, 1.000, 1.000, 0.112, 1.000, 1.000, 0.062, 0.996, 1.000, 0.018, 0.543, 0.999],
    ],
    [
        [0.123, 0.683, 0.997, 0.150, 0.679, 0.994, 0.103, 0.478, 0.960, 0.045, 0.180, 0.670],
        [0.091, 0.973, 1.000, 0.118, 0.958, 1.000, 0.076, 0.794, 1.000, 0.032, 0.324, 0.940],
        [0.086, 0.999, 1.000, 0.116, 0.995, 1.000, 0.071, 0.927, 1.000, 0.029, 0.420, 0.984],
        [0.074, 1.000, 1.000, 0.097, 1.000, 1.000, 0.062, 0.996, 1.000, 0.030, 0.605, 0.999],
    ],
];

#[rustfmt::skip]
pub const TABLE_2: TableValues = [
    [
        [0.125, 0.770, 1.000, 0.172, 0.772, 0.999, 0.174, 0.646, 0.992, 0.113, 0.354, 0.852],
        [0.098, 0.991, 1.000, 0.164, 0.985, 1.000, 0.154, 0.910, 1.000, 0.086, 0.527, 0.985],
        [0.083, 1.000, 1.000, 0.160, 0.999, 1.000, 0.138, 0.973, 1.000, 0.073, 0.613, 0.998],
        [0.085, 1.000, 1.000, 0.139, 1.000, 1.000, 0.139, 0.999, 1.000, 0.064, 0.792, 1.000],
    ],
    [
        [0.110, 0.748, 0.999, 0.165, 0.740, 0.999, 0.154, 0.595, 0.985, 0.107, 0.338, 0.833],
        [0.083, 0.986, 1.000, 0.136, 0.976, 1.000, 0.133, 0.885, 1.000, 0.078, 0.491, 0.984],
        [0.078, 1.000, 1.000, 0.125, 0.999, 1.000, 0.122, 0.961, 1.000, 0.074, 0.594, 0.996],
        [0.069, 1.000, 1.000, 0.124, 1.000, 1.000, 0.109, 0.999, 1.000, 0.068, 0.758, 1.000],
    ],
    [
        [0.120, 0.730, 0.999, 0.148, 0.720, 0.996, 0.144, 0.574, 0.978, 0.110, 0.339, 0.818],
        [0.089, 0.983, 1.000, 0.115, 0.971, 1.000, 0.115, 0.858, 1.000, 0.085, 0.497, 0.977],
        [0.084, 1.000, 1.000, 0.118, 0.996, 1.000, 0.102, 0.954, 1.000, 0.074, 0.587, 0.994],
        [0.072, 1.000, 1.000, 0.101, 1.000, 1.000, 0.095, 0.996, 1.000, 0.065, 0.739, 1.000],
    ],
];

#[rustfmt::skip]
pub const TABLE_3: TableValues = [
    [
        [0.312, 0.916, 1.000, 0.373, 0.944, 1.000, 0.140, 0.698, 0.997, 0.005, 0.174, 0.631],
        [0.723, 1.000, 1.000, 0.788, 1.000, 1.000, 0.328, 0.997, 1.000, 0.008, 0.414, 0.925],
        [0.950, 1.000, 1.000, 0.962, 1.000, 1.000, 0.545, 1.000, 1.000, 0.017, 0.572, 0.998],
        [1.000, 1.000, 1.000, 1.000, 1.000, 1.000, 0.927, 1.000, 1.000, 0.056, 0.805, 1.000],
    ],
    [
        [0.292, 0.897, 1.000, 0.348, 0.917, 1.000, 0.168, 0.724, 0.994, 0.015, 0.285, 0.741],
        [0.676, 1.000, 1.000, 0.725, 1.000, 1.000, 0.377, 0.996, 1.000, 0.038, 0.563, 0.981],
        [0.932, 1.000, 1.000, 0.942, 1.000, 1.000, 0.607, 1.000, 1.000, 0.076, 0.749, 1.000],
        [1.000, 1.000, 1.000, 1.000, 1.000, 1.000, 0.950, 1.000, 1.000, 0.193, 0.967, 1.000],
    ],
    [
        [0.308, 0.879, 1.000, 0.354, 0.903, 0.999, 0.205, 0.758, 0.992, 0.044, 0.396, 0.813],
        [0.665, 1.000, 1.000, 0.706, 1.000, 1.000, 0.449, 0.996, 1.000, 0.117, 0.722, 0.990],
        [0.907, 1.000, 1.000, 0.918, 1.000, 1.000, 0.682, 1.000, 1.000, 0.199, 0.906, 0.999],
        [0.998, 1.000, 1.000, 0.999, 1.000, 1.000, 0.961, 1.000, 1.000, 0.387, 0.995, 1.000],
    ],
];

#[rustfmt::skip]
pub const TABLE_4: TableValues = [
    [
        [0.122, 0.148, 0.175, 0.174, 0.242, 0.315, 0.165, 0.289, 0.409, 0.072, 0.193, 0.366],
        [0.118, 0.136, 0.185, 0.197, 0.281, 0.384, 0.196, 0.358, 0.468, 0.093, 0.308, 0.467],
        [0.107, 0.138, 0.190, 0.201, 0.301, 0.413, 0.223, 0.400, 0.524, 0.145, 0.372, 0.531],
        [0.102, 0.134, 0.189, 0.218, 0.347, 0.435, 0.266, 0.447, 0.567, 0.207, 0.425, 0.563],
    ],
    [
        [0.124, 0.147, 0.191, 0.168, 0.231, 0.308, 0.174, 0.288, 0.399, 0.106, 0.243, 0.397],
        [0.102, 0.133, 0.181, 0.180, 0.265, 0.353, 0.213, 0.363, 0.475, 0.152, 0.370, 0.506],
        [0.102, 0.132, 0.178, 0.187, 0.282, 0.385, 0.249, 0.408, 0.510, 0.205, 0.424, 0.562],
        [0.094, 0.130, 0.185, 0.211, 0.332, 0.435, 0.289, 0.455, 0.564, 0.286, 0.487, 0.617],
    ],
    [
        [0.131, 0.157, 0.185, 0.183, 0.232, 0.309, 0.190, 0.307, 0.417, 0.146, 0.297, 0.456],
        [0.109, 0.141, 0.187, 0.175, 0.267, 0.362, 0.235, 0.383, 0.486, 0.233, 0.435, 0.566],
        [0.109, 0.136, 0.188, 0.189, 0.282, 0.390, 0.266, 0.425, 0.538, 0.287, 0.488, 0.618],
        [0.104, 0.134, 0.193, 0.209, 0.329, 0.423, 0.312, 0.476, 0.593, 0.376, 0.553, 0.660],
    ],
];

#[rustfmt::skip]
pub const TABLE_5: TableValues = [
    [
        [0.224, 0.494, 0.931, 0.281, 0.573, 0.943, 0.112, 0.305, 0.662, 0.010, 0.096, 0.261],
        [0.442, 0.964, 1.000, 0.538, 0.970, 1.000, 0.184, 0.598, 0.993, 0.030, 0.158, 0.387],
        [0.716, 1.000, 1.000, 0.788, 1.000, 1.000, 0.287, 0.830, 1.000, 0.052, 0.224, 0.499],
        [0.992, 1.000, 1.000, 0.996, 1.000, 1.000, 0.544, 0.997, 1.000, 89.000, 0.298, 0.662],
    ],
    [
        [0.220, 0.478, 0.921, 0.273, 0.543, 0.932, 0.133, 0.337, 0.706, 0.027, 0.140, 0.324],
        [0.415, 0.941, 1.000, 0.500, 0.953, 1.000, 0.215, 0.645, 0.993, 0.064, 0.225, 0.489],
        [0.679, 0.999, 1.000, 0.740, 0.999, 1.000, 0.329, 0.865, 1.000, 0.101, 0.294, 0.613],
        [0.984, 1.000, 1.000, 0.988, 1.000, 1.000, 0.618, 0.998, 1.000, 0.158, 0.408, 0.852],
    ],
    [
        [0.229, 0.487, 0.914, 0.273, 0.541, 0.922, 0.162, 0.377, 0.742, 0.054, 0.188, 0.387],
        [0.431, 0.919, 1.000, 0.491, 0.931, 1.000, 0.270, 0.702, 0.994, 0.116, 0.305, 0.626],
        [0.658, 0.995, 1.000, 0.717, 0.996, 1.000, 0.406, 0.899, 1.000, 0.163, 0.389, 0.788],
        [0.969, 1.000, 1.000, 0.971, 1.000, 1.000, 0.712, 0.998, 1.000, 0.250, 0.549, 0.970],
    ],
];

#[rustfmt::skip]
pub const TABLE_6: TableValues = [
    [
        [0.144, 0.186, 0.282, 0.199, 0.290, 0.430, 0.168, 0.315, 0.476, 0.066, 0.183, 0.351],
        [0.118, 0.188, 0.283, 0.213, 0.328, 0.467, 0.204, 0.383, 0.549, 0.090, 0.252, 0.443],
        [0.120, 0.176, 0.294, 0.223, 0.362, 0.497, 0.238, 0.424, 0.588, 0.127, 0.306, 0.499],
        [0.128, 0.193, 0.300, 0.244, 0.391, 0.531, 0.287, 0.483, 0.631, 0.167, 0.370, 0.568],
    ],
    [
        [0.140, 0.184, 0.283, 0.185, 0.273, 0.417, 0.173, 0.319, 0.464, 0.087, 0.213, 0.370],
        [0.118, 0.181, 0.280, 0.196, 0.309, 0.453, 0.211, 0.385, 0.545, 0.128, 0.300, 0.472],
        [0.116, 0.175, 0.292, 0.211, 0.347, 0.487, 0.249, 0.429, 0.590, 0.168, 0.350, 0.530],
        [0.126, 0.187, 0.296, 0.229, 0.374, 0.516, 0.297, 0.492, 0.633, 0.228, 0.429, 0.597],
    ],
    [
        [0.148, 0.188, 0.298, 0.188, 0.276, 0.413, 0.188, 0.330, 0.473, 0.120, 0.251, 0.398],
        [0.126, 0.192, 0.283, 0.195, 0.312, 0.452, 0.231, 0.396, 0.558, 0.176, 0.348, 0.516],
        [0.122, 0.179, 0.300, 0.214, 0.343, 0.485, 0.271, 0.447, 0.602, 0.224, 0.408, 0.566],
        [0.128, 0.190, 0.299, 0.224, 0.372, 0.510, 0.325, 0.506, 0.653, 0.302, 0.495, 0.645],
    ],
];

#[rustfmt::skip]
pub const TABLE_7: TableValues = [
    [
        [0.273, 0.448, 0.381, 0.391, 0.620, 0.570, 0.199, 0.364, 0.367, 0.071, 0.140, 0.172],
        [0.733, 0.990, 0.985, 0.819, 0.995, 0.994, 0.362, 0.744, 0.734, 0.073, 0.199, 0.246],
        [0.966, 1.000, 1.000, 0.980, 1.000, 1.000, 0.553, 0.952, 0.941, 0.087, 0.271, 0.316],
        [1.000, 1.000, 1.000, 1.000, 1.000, 1.000, 0.929, 1.000, 1.000, 0.114, 0.354, 0.412],
    ],
    [
        [0.254, 0.425, 0.366, 0.343, 0.551, 0.506, 0.198, 0.348, 0.361, 0.092, 0.186, 0.209],
        [0.663, 0.972, 0.962, 0.720, 0.977, 0.978, 0.345, 0.714, 0.702, 0.104, 0.250, 0.303],
        [0.932, 0.999, 1.000, 0.948, 1.000, 1.000, 0.533, 0.934, 0.917, 0.120, 0.330, 0.369],
        [1.000, 1.000, 1.000, 1.000, 1.000, 1.000, 0.893, 1.000, 1.000, 0.169, 0.432, 0.488],
    ],
    [
        [0.266, 0.437, 0.399, 0.334, 0.530, 0.498, 0.208, 0.368, 0.388, 0.118, 0.228, 0.252],
        [0.646, 0.946, 0.937, 0.663, 0.942, 0.950, 0.368, 0.709, 0.697, 0.142, 0.317, 0.372],
        [0.893, 0.998, 0.997, 0.902, 0.997, 0.997, 0.525, 0.906, 0.895, 0.167, 0.406, 0.439],
        [1.000, 1.000, 1.000, 0.998, 1.000, 1.000, 0.852, 0.997, 0.998, 0.227, 0.514, 0.564],
    ],
];

#[rustfmt::skip]
pub const TABLE_8: TableValues = [
    [
        [0.090, 0.059, 0.038, 0.141, 0.093, 0.072, 0.145, 0.124, 0.112, 0.131, 0.150, 0.155],
        [0.078, 0.037, 0.023, 0.114, 0.070, 0.050, 0.116, 0.097, 0.082, 0.104, 0.126, 0.135],
        [0.065, 0.034, 0.017, 0.104, 0.061, 0.036, 0.115, 0.089, 0.070, 0.097, 0.124, 0.124],
        [0.058, 0.025, 0.014, 0.091, 0.053, 0.036, 0.101, 0.085, 0.063, 0.092, 0.115, 0.122],
    ],
    [
        [0.092, 0.063, 0.042, 0.131, 0.091, 0.065, 0.139, 0.122, 0.108, 0.131, 0.153, 0.155],
        [0.076, 0.038, 0.025, 0.104, 0.059, 0.045, 0.103, 0.089, 0.076, 0.102, 0.123, 0.132],
        [0.066, 0.034, 0.019, 0.093, 0.053, 0.030, 0.104, 0.078, 0.063, 0.094, 0.122, 0.122],
        [0.055, 0.025, 0.015, 0.077, 0.042, 0.028, 0.090, 0.074, 0.056, 0.090, 0.107, 0.119],
    ],
    [
        [0.113, 0.079, 0.058, 0.138, 0.102, 0.078, 0.148, 0.131, 0.122, 0.146, 0.166, 0.170],
        [0.090, 0.052, 0.038, 0.106, 0.071, 0.052, 0.109, 0.092, 0.077, 0.111, 0.131, 0.142],
        [0.075, 0.042, 0.028, 0.091, 0.055, 0.034, 0.106, 0.084, 0.064, 0.106, 0.128, 0.127],
        [0.060, 0.034, 0.022, 0.075, 0.046, 0.034, 0.092, 0.072, 0.057, 0.098, 0.115, 0.125],
    ],
];
