//! Reference values for the two sector fixtures, as printed (rounded to
//! integers, errors to two decimals).

#![allow(dead_code)]

/// `(aggregate, trend, seasonal, random)` per month, 2010-01..2015-12.
pub type DecompositionRow = (f64, Option<f64>, f64, Option<f64>);

pub const CONSUMER_DURABLES_DECOMPOSITION: [DecompositionRow; 72] = [
    (3890.0, None, -180.0, None),
    (4006.0, None, -185.0, None),
    (4150.0, None, -176.0, None),
    (4512.0, None, 55.0, None),
    (4575.0, None, 88.0, None),
    (4518.0, None, -5.0, None),
    (5084.0, Some(5248.0), 53.0, Some(-216.0)),
    (5658.0, Some(5412.0), -78.0, Some(323.0)),
    (6086.0, Some(5555.0), 122.0, Some(410.0)),
    (6458.0, Some(5705.0), 251.0, Some(501.0)),
    (6742.0, Some(5856.0), 182.0, Some(704.0)),
    (6179.0, Some(6014.0), -127.0, Some(291.0)),
    (6115.0, Some(6175.0), -180.0, Some(120.0)),
    (5735.0, Some(6277.0), -185.0, Some(-357.0)),
    (5844.0, Some(6326.0), -176.0, Some(-306.0)),
    (6429.0, Some(6351.0), 55.0, Some(24.0)),
    (6271.0, Some(6330.0), 88.0, Some(-147.0)),
    (6620.0, Some(6275.0), -5.0, Some(350.0)),
    (6830.0, Some(6224.0), 53.0, Some(553.0)),
    (6362.0, Some(6227.0), -78.0, Some(213.0)),
    (6563.0, Some(6278.0), 122.0, Some(164.0)),
    (6581.0, Some(6315.0), 251.0, Some(14.0)),
    (6124.0, Some(6335.0), 182.0, Some(-393.0)),
    (5463.0, Some(6323.0), -127.0, Some(-733.0)),
    (5628.0, Some(6282.0), -180.0, Some(-474.0)),
    (6277.0, Some(6261.0), -185.0, Some(201.0)),
    (6522.0, Some(6259.0), -176.0, Some(439.0)),
    (6659.0, Some(6281.0), 55.0, Some(323.0)),
    (6500.0, Some(6361.0), 88.0, Some(518.0)),
    (6108.0, Some(6518.0), -5.0, Some(-405.0)),
    (6353.0, Some(6703.0), 53.0, Some(-402.0)),
    (6337.0, Some(6830.0), -78.0, Some(-416.0)),
    (6549.0, Some(6895.0), 122.0, Some(-467.0)),
    (7126.0, Some(6936.0), 251.0, Some(-61.0)),
    (7504.0, Some(7000.0), 182.0, Some(322.0)),
    (7852.0, Some(7071.0), -127.0, Some(908.0)),
    (7663.0, Some(7094.0), -180.0, Some(749.0)),
    (7300.0, Some(7075.0), -185.0, Some(410.0)),
    (7053.0, Some(7026.0), -176.0, Some(203.0)),
    (7115.0, Some(6945.0), 55.0, Some(115.0)),
    (7574.0, Some(6826.0), 88.0, Some(660.0)),
    (6737.0, Some(6668.0), -5.0, Some(74.0)),
    (6288.0, Some(6497.0), 53.0, Some(-262.0)),
    (5936.0, Some(6347.0), -78.0, Some(-333.0)),
    (5788.0, Some(6245.0), 122.0, Some(-579.0)),
    (5943.0, Some(6190.0), 251.0, Some(-499.0)),
    (5822.0, Some(6167.0), 182.0, Some(-527.0)),
    (5750.0, Some(6230.0), -127.0, Some(-353.0)),
    (5648.0, Some(6395.0), -180.0, Some(-568.0)),
    (5718.0, Some(6612.0), -185.0, Some(-709.0)),
    (6199.0, Some(6891.0), -176.0, Some(-515.0)),
    (6650.0, Some(7205.0), 55.0, Some(-609.0)),
    (7467.0, Some(7523.0), 88.0, Some(-144.0)),
    (8357.0, Some(7846.0), -5.0, Some(516.0)),
    (8647.0, Some(8190.0), 53.0, Some(404.0)),
    (8784.0, Some(8572.0), -78.0, Some(290.0)),
    (9616.0, Some(8945.0), 122.0, Some(550.0)),
    (9659.0, Some(9287.0), 251.0, Some(121.0)),
    (9728.0, Some(9575.0), 182.0, Some(-30.0)),
    (9615.0, Some(9778.0), -127.0, Some(-36.0)),
    (10027.0, Some(9958.0), -180.0, Some(249.0)),
    (10502.0, Some(10156.0), -185.0, Some(531.0)),
    (10373.0, Some(10294.0), -176.0, Some(256.0)),
    (10693.0, Some(10414.0), 55.0, Some(224.0)),
    (10342.0, Some(10597.0), 88.0, Some(-343.0)),
    (10336.0, Some(10798.0), -5.0, Some(-457.0)),
    (10985.0, None, 53.0, None),
    (11208.0, None, -78.0, None),
    (10498.0, None, 122.0, None),
    (11671.0, None, 251.0, None),
    (12097.0, None, 182.0, None),
    (12075.0, None, -127.0, None),
];

pub const SMALL_CAP_DECOMPOSITION: [DecompositionRow; 72] = [
    (8677.0, None, 15.0, None),
    (8230.0, None, -253.0, None),
    (8448.0, None, -415.0, None),
    (9053.0, None, -47.0, None),
    (8702.0, None, -123.0, None),
    (8785.0, None, 43.0, None),
    (9324.0, Some(9324.0), 214.0, Some(-214.0)),
    (9687.0, Some(9336.0), -56.0, Some(408.0)),
    (10158.0, Some(9308.0), 135.0, Some(715.0)),
    (10647.0, Some(9275.0), 241.0, Some(1131.0)),
    (10544.0, Some(9245.0), 279.0, Some(1020.0)),
    (9420.0, Some(9200.0), -31.0, Some(251.0)),
    (9109.0, Some(9134.0), 15.0, Some(-40.0)),
    (8072.0, Some(9003.0), -253.0, Some(-677.0)),
    (7942.0, Some(8786.0), -415.0, Some(-429.0)),
    (8777.0, Some(8502.0), -47.0, Some(323.0)),
    (8256.0, Some(8172.0), -123.0, Some(207.0)),
    (8147.0, Some(7850.0), 43.0, Some(254.0)),
    (8377.0, Some(7573.0), 214.0, Some(590.0)),
    (7482.0, Some(7397.0), -56.0, Some(141.0)),
    (7150.0, Some(7295.0), 135.0, Some(-280.0)),
    (6838.0, Some(7161.0), 241.0, Some(-564.0)),
    (6444.0, Some(7002.0), 279.0, Some(-836.0)),
    (5800.0, Some(6849.0), -31.0, Some(-1018.0)),
    (6084.0, Some(6702.0), 15.0, Some(-634.0)),
    (6871.0, Some(6591.0), -253.0, Some(533.0)),
    (6693.0, Some(6532.0), -415.0, Some(576.0)),
    (6807.0, Some(6523.0), -47.0, Some(331.0)),
    (6398.0, Some(6563.0), -123.0, Some(-42.0)),
    (6348.0, Some(6657.0), 43.0, Some(-351.0)),
    (6649.0, Some(6777.0), 214.0, Some(-342.0)),
    (6548.0, Some(6823.0), -56.0, Some(-218.0)),
    (6659.0, Some(6789.0), 135.0, Some(-264.0)),
    (7122.0, Some(6728.0), 241.0, Some(153.0)),
    (7104.0, Some(6681.0), 279.0, Some(145.0)),
    (7392.0, Some(6644.0), -31.0, Some(779.0)),
    (7386.0, Some(6579.0), 15.0, Some(792.0)),
    (6666.0, Some(6482.0), -253.0, Some(437.0)),
    (6081.0, Some(6376.0), -415.0, Some(120.0)),
    (5962.0, Some(6266.0), -47.0, Some(-257.0)),
    (6101.0, Some(6163.0), -123.0, Some(61.0)),
    (5779.0, Some(6070.0), 43.0, Some(-334.0)),
    (5652.0, Some(5988.0), 214.0, Some(-550.0)),
    (5227.0, Some(5937.0), -56.0, Some(-654.0)),
    (5421.0, Some(5951.0), 135.0, Some(-665.0)),
    (5731.0, Some(6040.0), 241.0, Some(-550.0)),
    (6009.0, Some(6191.0), 279.0, Some(-461.0)),
    (6280.0, Some(6448.0), -31.0, Some(-137.0)),
    (6504.0, Some(6803.0), 15.0, Some(-314.0)),
    (6341.0, Some(7191.0), -253.0, Some(-597.0)),
    (6729.0, Some(7618.0), -415.0, Some(-474.0)),
    (7454.0, Some(8046.0), -47.0, Some(-544.0)),
    (8228.0, Some(8466.0), -123.0, Some(-116.0)),
    (9815.0, Some(8884.0), 43.0, Some(889.0)),
    (10132.0, Some(9283.0), 214.0, Some(635.0)),
    (10073.0, Some(9687.0), -56.0, Some(442.0)),
    (10819.0, Some(10072.0), 135.0, Some(612.0)),
    (10604.0, Some(10416.0), 241.0, Some(-52.0)),
    (11227.0, Some(10697.0), 279.0, Some(251.0)),
    (11072.0, Some(10860.0), -31.0, Some(243.0)),
    (11294.0, Some(10964.0), 15.0, Some(315.0)),
    (11255.0, Some(11085.0), -253.0, Some(423.0)),
    (11057.0, Some(11146.0), -415.0, Some(326.0)),
    (11375.0, Some(11157.0), -47.0, Some(266.0)),
    (11059.0, Some(11172.0), -123.0, Some(9.0)),
    (10894.0, Some(11191.0), 43.0, Some(-339.0)),
    (11544.0, None, 214.0, None),
    (11578.0, None, -56.0, None),
    (10764.0, None, 135.0, None),
    (10916.0, None, 241.0, None),
    (11294.0, None, 279.0, None),
    (11444.0, None, -31.0, None),
];

/// One evaluation table: `(actual, forecast, error)` rows and the
/// `[min, max, mean, sd]` summary printed for it.
pub struct ErrorTable {
    pub label: &'static str,
    pub first_month: (i32, u32),
    pub rows: [(f64, f64, f64); 12],
    pub summary: [f64; 4],
}

pub const ERROR_TABLES: [ErrorTable; 10] = [
    ErrorTable {
        label: "method I consumer durables",
        first_month: (2015, 1),
        rows: [
            (10027.0, 9451.0, 5.74),
            (10502.0, 9146.0, 12.91),
            (10373.0, 9166.0, 11.63),
            (10693.0, 9647.0, 9.78),
            (10342.0, 9839.0, 4.86),
            (10336.0, 10076.0, 2.52),
            (10985.0, 9974.0, 9.20),
            (11208.0, 10144.0, 9.49),
            (10498.0, 10649.0, 1.44),
            (11671.0, 10990.0, 5.83),
            (12097.0, 11197.0, 7.44),
            (12075.0, 10859.0, 10.07),
        ],
        summary: [1.44, 12.91, 7.58, 3.56],
    },
    ErrorTable {
        label: "method I small cap",
        first_month: (2015, 1),
        rows: [
            (11294.0, 10790.0, 4.46),
            (11255.0, 10208.0, 9.31),
            (11057.0, 10105.0, 8.61),
            (11375.0, 10962.0, 3.63),
            (11059.0, 11396.0, 3.05),
            (10894.0, 11885.0, 9.10),
            (11544.0, 11942.0, 3.45),
            (11578.0, 12000.0, 3.64),
            (10764.0, 12729.0, 18.26),
            (10916.0, 13354.0, 22.33),
            (11294.0, 13904.0, 23.11),
            (11444.0, 13564.0, 18.52),
        ],
        summary: [3.05, 23.11, 10.62, 7.78],
    },
    ErrorTable {
        label: "method II consumer durables",
        first_month: (2015, 1),
        rows: [
            (10027.0, 9451.0, 5.74),
            (10502.0, 9655.0, 8.07),
            (10373.0, 10419.0, 0.44),
            (10693.0, 10851.0, 1.48),
            (10342.0, 10916.0, 5.55),
            (10336.0, 10645.0, 2.99),
            (10985.0, 10274.0, 6.47),
            (11208.0, 11035.0, 1.54),
            (10498.0, 11695.0, 11.40),
            (11671.0, 11001.0, 5.74),
            (12097.0, 11783.0, 2.60),
            (12075.0, 11767.0, 2.55),
        ],
        summary: [0.44, 11.40, 4.55, 3.20],
    },
    ErrorTable {
        label: "method II small cap",
        first_month: (2015, 1),
        rows: [
            (11294.0, 10790.0, 4.46),
            (11255.0, 10669.0, 5.21),
            (11057.0, 11160.0, 0.93),
            (11375.0, 12021.0, 5.68),
            (11059.0, 11982.0, 8.35),
            (10894.0, 11695.0, 7.35),
            (11544.0, 10960.0, 5.06),
            (11578.0, 11445.0, 1.16),
            (10764.0, 12233.0, 13.65),
            (10916.0, 11504.0, 5.39),
            (11294.0, 11504.0, 1.86),
            (11444.0, 10844.0, 5.24),
        ],
        summary: [0.93, 13.65, 5.36, 3.47],
    },
    ErrorTable {
        label: "method III consumer durables",
        first_month: (2014, 7),
        rows: [
            (8243.0, 8180.0, 0.76),
            (8494.0, 8452.0, 0.49),
            (9067.0, 9051.0, 0.18),
            (9538.0, 9756.0, 2.29),
            (9757.0, 10162.0, 4.15),
            (9651.0, 10246.0, 6.17),
            (9778.0, 10636.0, 8.77),
            (9971.0, 11034.0, 10.66),
            (10118.0, 11509.0, 13.75),
            (10469.0, 12116.0, 15.73),
            (10685.0, 12633.0, 18.23),
            (10793.0, 12889.0, 19.42),
        ],
        summary: [0.18, 19.42, 8.38, 7.10],
    },
    ErrorTable {
        label: "method III small cap",
        first_month: (2014, 7),
        rows: [
            (9497.0, 9413.0, 0.88),
            (9631.0, 9743.0, 1.16),
            (10207.0, 10490.0, 2.77),
            (10657.0, 11315.0, 6.17),
            (10976.0, 11778.0, 7.31),
            (10829.0, 11943.0, 10.29),
            (10979.0, 12842.0, 16.97),
            (10832.0, 13100.0, 20.94),
            (10731.0, 13421.0, 25.07),
            (11110.0, 14198.0, 27.79),
            (11049.0, 14545.0, 31.64),
            (11234.0, 15172.0, 35.05),
        ],
        summary: [0.88, 35.05, 15.50, 12.36],
    },
    ErrorTable {
        label: "method IV consumer durables",
        first_month: (2015, 1),
        rows: [
            (10027.0, 10232.0, 2.04),
            (10502.0, 10743.0, 2.29),
            (10373.0, 11095.0, 6.96),
            (10693.0, 11381.0, 6.43),
            (10342.0, 11628.0, 12.43),
            (10336.0, 11849.0, 14.63),
            (10985.0, 12050.0, 9.70),
            (11208.0, 12237.0, 9.18),
            (10498.0, 12411.0, 18.22),
            (11671.0, 12576.0, 7.75),
            (12097.0, 12732.0, 5.24),
            (12075.0, 12881.0, 6.67),
        ],
        summary: [2.04, 18.22, 8.46, 4.78],
    },
    ErrorTable {
        label: "method IV small cap",
        first_month: (2015, 1),
        rows: [
            (11294.0, 11030.0, 2.34),
            (11255.0, 11018.0, 2.11),
            (11057.0, 11015.0, 0.38),
            (11375.0, 11014.0, 3.17),
            (11059.0, 11014.0, 0.41),
            (10894.0, 11014.0, 1.10),
            (11544.0, 11014.0, 4.59),
            (11578.0, 11014.0, 4.87),
            (10764.0, 11014.0, 2.32),
            (10916.0, 11014.0, 0.90),
            (11294.0, 11014.0, 2.48),
            (11444.0, 11014.0, 3.76),
        ],
        summary: [0.38, 4.87, 2.37, 1.52],
    },
    ErrorTable {
        label: "method V consumer durables",
        first_month: (2015, 1),
        rows: [
            (10027.0, 10231.0, 2.03),
            (10502.0, 10218.0, 2.70),
            (10373.0, 10615.0, 2.33),
            (10693.0, 10272.0, 3.94),
            (10342.0, 10861.0, 5.02),
            (10336.0, 10214.0, 1.18),
            (10985.0, 10334.0, 5.93),
            (11208.0, 11206.0, 0.02),
            (10498.0, 11209.0, 6.77),
            (11671.0, 10216.0, 12.47),
            (12097.0, 12043.0, 0.45),
            (12075.0, 12108.0, 0.27),
        ],
        summary: [0.02, 12.47, 3.59, 3.58],
    },
    ErrorTable {
        label: "method V small cap",
        first_month: (2015, 1),
        rows: [
            (11294.0, 11030.0, 2.34),
            (11255.0, 11844.0, 5.23),
            (11057.0, 11245.0, 1.70),
            (11375.0, 11004.0, 3.26),
            (11059.0, 11459.0, 3.62),
            (10894.0, 10978.0, 0.77),
            (11544.0, 10852.0, 5.99),
            (11578.0, 11706.0, 1.11),
            (10764.0, 11586.0, 7.64),
            (10916.0, 10668.0, 2.27),
            (11294.0, 11027.0, 2.36),
            (11444.0, 11296.0, 1.29),
        ],
        summary: [0.77, 7.64, 3.13, 2.14],
    },
];

/// Trend-plus-seasonal tables: `(actual trend, actual seasonal, actual sum)`
/// for 2014-07..2015-06.
pub const CONSUMER_DURABLES_TREND_SEASONAL_ACTUALS: [(f64, f64, f64); 12] = [
    (8190.0, 53.0, 8243.0),
    (8572.0, -78.0, 8494.0),
    (8945.0, 122.0, 9067.0),
    (9287.0, 251.0, 9538.0),
    (9575.0, 182.0, 9757.0),
    (9778.0, -127.0, 9651.0),
    (9958.0, -180.0, 9778.0),
    (10156.0, -185.0, 9971.0),
    (10294.0, -176.0, 10118.0),
    (10414.0, 55.0, 10469.0),
    (10597.0, 88.0, 10685.0),
    (10798.0, -5.0, 10793.0),
];

pub const SMALL_CAP_TREND_SEASONAL_ACTUALS: [(f64, f64, f64); 12] = [
    (9283.0, 214.0, 9497.0),
    (9687.0, -56.0, 9631.0),
    (10072.0, 135.0, 10207.0),
    (10416.0, 241.0, 10657.0),
    (10697.0, 279.0, 10976.0),
    (10860.0, -31.0, 10829.0),
    (10964.0, 15.0, 10979.0),
    (11085.0, -253.0, 10832.0),
    (11146.0, -415.0, 10731.0),
    (11157.0, -47.0, 11110.0),
    (11172.0, -123.0, 11049.0),
    (11191.0, 43.0, 11234.0),
];

/// Two-window comparison, 2011-07..2014-06: `[trend_a, seasonal_a, sum_a,
/// trend_b, seasonal_b, sum_b, variation_pct]`.
pub const CONSUMER_DURABLES_STABILITY: [[f64; 7]; 36] = [
    [6224.0, -12.0, 6212.0, 6224.0, 142.0, 6366.0, 2.48],
    [6227.0, -113.0, 6114.0, 6227.0, -123.0, 6104.0, 0.16],
    [6278.0, 21.0, 6299.0, 6278.0, 54.0, 6332.0, 0.52],
    [6315.0, 258.0, 6573.0, 6315.0, 161.0, 6476.0, 1.48],
    [6335.0, 226.0, 6561.0, 6335.0, 42.0, 6377.0, 2.80],
    [6323.0, -81.0, 6242.0, 6323.0, -164.0, 6159.0, 1.33],
    [6282.0, -206.0, 6076.0, 6282.0, 175.0, 6107.0, 0.51],
    [6261.0, -281.0, 5980.0, 6261.0, -61.0, 6200.0, 3.67],
    [6259.0, -204.0, 6055.0, 6259.0, -65.0, 6194.0, 2.30],
    [6281.0, 35.0, 6316.0, 6281.0, 84.0, 6365.0, 0.78],
    [6361.0, 210.0, 6571.0, 6361.0, 160.0, 6521.0, 0.76],
    [6518.0, 146.0, 6664.0, 6518.0, -57.0, 6461.0, 3.05],
    [6703.0, -12.0, 6691.0, 6703.0, 142.0, 6845.0, 2.31],
    [6830.0, -113.0, 6717.0, 6830.0, -123.0, 6707.0, 0.15],
    [6895.0, 21.0, 6916.0, 6895.0, 54.0, 6949.0, 0.48],
    [6936.0, 258.0, 7194.0, 6936.0, 161.0, 7097.0, 1.35],
    [7000.0, 226.0, 7226.0, 7000.0, 42.0, 7042.0, 2.55],
    [7071.0, -81.0, 6990.0, 7071.0, -164.0, 6907.0, 1.19],
    [7094.0, -206.0, 6888.0, 7094.0, 175.0, 6919.0, 0.45],
    [7075.0, -281.0, 6794.0, 7075.0, -61.0, 7014.0, 3.24],
    [7026.0, -204.0, 6822.0, 7026.0, -65.0, 6961.0, 2.04],
    [6945.0, 35.0, 6980.0, 6945.0, 84.0, 7029.0, 0.70],
    [6826.0, 210.0, 7036.0, 6826.0, 160.0, 6986.0, 0.71],
    [6668.0, 146.0, 6814.0, 6668.0, -57.0, 6611.0, 2.98],
    [6497.0, -12.0, 6485.0, 6497.0, 142.0, 6639.0, 2.38],
    [6347.0, -113.0, 6234.0, 6347.0, -123.0, 6224.0, 0.16],
    [6245.0, 21.0, 6266.0, 6245.0, 54.0, 6299.0, 0.53],
    [6190.0, 258.0, 6448.0, 6190.0, 161.0, 6351.0, 1.50],
    [6167.0, 226.0, 6393.0, 6167.0, 42.0, 6209.0, 2.89],
    [6230.0, -81.0, 6149.0, 6230.0, -164.0, 6066.0, 1.35],
    [6395.0, -206.0, 6189.0, 6395.0, -175.0, 6220.0, 0.50],
    [6612.0, -281.0, 6331.0, 6612.0, -61.0, 6551.0, 3.47],
    [6891.0, -204.0, 6687.0, 6891.0, -65.0, 6826.0, 2.08],
    [7205.0, 35.0, 7240.0, 7205.0, 84.0, 7289.0, 0.68],
    [7523.0, 210.0, 7733.0, 7523.0, 160.0, 7683.0, 0.65],
    [7846.0, 146.0, 7992.0, 7846.0, -57.0, 7789.0, 2.54],
];

pub const SMALL_CAP_STABILITY: [[f64; 7]; 36] = [
    [7573.0, 120.0, 7693.0, 7573.0, 329.0, 7902.0, 2.72],
    [7397.0, -102.0, 7295.0, 7397.0, -97.0, 7300.0, 0.07],
    [7295.0, 47.0, 7342.0, 7295.0, 17.0, 7312.0, -0.41],
    [7161.0, 319.0, 7480.0, 7161.0, 19.0, 7180.0, -4.01],
    [7002.0, 281.0, 7283.0, 7002.0, 85.0, 7087.0, -2.69],
    [6849.0, -27.0, 6822.0, 6849.0, -33.0, 6816.0, -0.09],
    [6702.0, 2.0, 6704.0, 6702.0, 87.0, 6789.0, 1.27],
    [6591.0, -294.0, 6297.0, 6591.0, -23.0, 6568.0, 4.30],
    [6532.0, -431.0, 6101.0, 6532.0, -246.0, 6286.0, 3.03],
    [6523.0, -49.0, 6474.0, 6523.0, -67.0, 6456.0, -0.28],
    [6563.0, -60.0, 6503.0, 6563.0, -113.0, 6450.0, -0.82],
    [6657.0, 193.0, 6850.0, 6657.0, 40.0, 6697.0, -2.23],
    [6777.0, 120.0, 6897.0, 6777.0, 329.0, 7106.0, 3.03],
    [6823.0, -102.0, 6721.0, 6823.0, -97.0, 6726.0, 0.07],
    [6789.0, 47.0, 6836.0, 6789.0, 17.0, 6806.0, -0.44],
    [6728.0, 319.0, 7047.0, 6728.0, 19.0, 6747.0, -4.26],
    [6681.0, 281.0, 6962.0, 6681.0, 85.0, 6766.0, -2.82],
    [6644.0, -27.0, 6617.0, 6644.0, -33.0, 6611.0, -0.09],
    [6579.0, 2.0, 6581.0, 6579.0, 87.0, 6666.0, 1.29],
    [6483.0, -294.0, 6189.0, 6483.0, -23.0, 6460.0, 4.38],
    [6376.0, -431.0, 5945.0, 6376.0, -246.0, 6130.0, 3.11],
    [6266.0, -49.0, 6217.0, 6266.0, -67.0, 6199.0, -0.29],
    [6163.0, -60.0, 6103.0, 6163.0, -113.0, 6050.0, -0.87],
    [6071.0, 193.0, 6264.0, 6071.0, 40.0, 6111.0, -2.44],
    [5988.0, 120.0, 6108.0, 5988.0, 329.0, 6317.0, 3.42],
    [5938.0, -102.0, 5836.0, 5938.0, -97.0, 5841.0, 0.09],
    [5951.0, 47.0, 5998.0, 5951.0, 17.0, 5968.0, -0.50],
    [6040.0, 319.0, 6359.0, 6040.0, 19.0, 6059.0, -4.72],
    [6191.0, 281.0, 6472.0, 6191.0, 85.0, 6276.0, -3.03],
    [6448.0, -27.0, 6421.0, 6448.0, -33.0, 6415.0, -0.09],
    [6803.0, 2.0, 6805.0, 6803.0, 87.0, 6890.0, 1.25],
    [7191.0, -294.0, 6897.0, 7191.0, -23.0, 7168.0, 3.92],
    [7618.0, -431.0, 7187.0, 7618.0, -246.0, 7372.0, 2.57],
    [8046.0, -49.0, 7997.0, 8046.0, -67.0, 7979.0, -0.23],
    [8466.0, -60.0, 8406.0, 8466.0, -113.0, 8353.0, -0.63],
    [8884.0, 193.0, 9077.0, 8884.0, 40.0, 8924.0, -1.69],
];
