// ColorBrewer color schemes (sequential and diverging, 3 to 9 classes).
// Copyright (c) 2002 Cynthia Brewer, Mark Harrower, and The Pennsylvania
// State University. Licensed under the Apache License, Version 2.0.
// Generated from the published scheme tables; do not edit by hand.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace odflow::colorbrewer {

struct SchemeEntry {
  std::string_view name;
  int classes;
  // Packed 0xRRGGBB values, `classes` of them used.
  std::array<std::uint32_t, 9> colors;
};

inline constexpr SchemeEntry kSchemes[] = {
    {"Blues", 3, {0xdeebf7, 0x9ecae1, 0x3182bd}},
    {"Blues", 4, {0xeff3ff, 0xbdd7e7, 0x6baed6, 0x2171b5}},
    {"Blues", 5, {0xeff3ff, 0xbdd7e7, 0x6baed6, 0x3182bd, 0x08519c}},
    {"Blues", 6, {0xeff3ff, 0xc6dbef, 0x9ecae1, 0x6baed6, 0x3182bd, 0x08519c}},
    {"Blues", 7, {0xeff3ff, 0xc6dbef, 0x9ecae1, 0x6baed6, 0x4292c6, 0x2171b5, 0x084594}},
    {"Blues", 8, {0xf7fbff, 0xdeebf7, 0xc6dbef, 0x9ecae1, 0x6baed6, 0x4292c6, 0x2171b5, 0x084594}},
    {"Blues", 9, {0xf7fbff, 0xdeebf7, 0xc6dbef, 0x9ecae1, 0x6baed6, 0x4292c6, 0x2171b5, 0x08519c, 0x08306b}},
    {"BuGn", 3, {0xe5f5f9, 0x99d8c9, 0x2ca25f}},
    {"BuGn", 4, {0xedf8fb, 0xb2e2e2, 0x66c2a4, 0x238b45}},
    {"BuGn", 5, {0xedf8fb, 0xb2e2e2, 0x66c2a4, 0x2ca25f, 0x006d2c}},
    {"BuGn", 6, {0xedf8fb, 0xccece6, 0x99d8c9, 0x66c2a4, 0x2ca25f, 0x006d2c}},
    {"BuGn", 7, {0xedf8fb, 0xccece6, 0x99d8c9, 0x66c2a4, 0x41ae76, 0x238b45, 0x005824}},
    {"BuGn", 8, {0xf7fcfd, 0xe5f5f9, 0xccece6, 0x99d8c9, 0x66c2a4, 0x41ae76, 0x238b45, 0x005824}},
    {"BuGn", 9, {0xf7fcfd, 0xe5f5f9, 0xccece6, 0x99d8c9, 0x66c2a4, 0x41ae76, 0x238b45, 0x006d2c, 0x00441b}},
    {"BuPu", 3, {0xe0ecf4, 0x9ebcda, 0x8856a7}},
    {"BuPu", 4, {0xedf8fb, 0xb3cde3, 0x8c96c6, 0x88419d}},
    {"BuPu", 5, {0xedf8fb, 0xb3cde3, 0x8c96c6, 0x8856a7, 0x810f7c}},
    {"BuPu", 6, {0xedf8fb, 0xbfd3e6, 0x9ebcda, 0x8c96c6, 0x8856a7, 0x810f7c}},
    {"BuPu", 7, {0xedf8fb, 0xbfd3e6, 0x9ebcda, 0x8c96c6, 0x8c6bb1, 0x88419d, 0x6e016b}},
    {"BuPu", 8, {0xf7fcfd, 0xe0ecf4, 0xbfd3e6, 0x9ebcda, 0x8c96c6, 0x8c6bb1, 0x88419d, 0x6e016b}},
    {"BuPu", 9, {0xf7fcfd, 0xe0ecf4, 0xbfd3e6, 0x9ebcda, 0x8c96c6, 0x8c6bb1, 0x88419d, 0x810f7c, 0x4d004b}},
    {"GnBu", 3, {0xe0f3db, 0xa8ddb5, 0x43a2ca}},
    {"GnBu", 4, {0xf0f9e8, 0xbae4bc, 0x7bccc4, 0x2b8cbe}},
    {"GnBu", 5, {0xf0f9e8, 0xbae4bc, 0x7bccc4, 0x43a2ca, 0x0868ac}},
    {"GnBu", 6, {0xf0f9e8, 0xccebc5, 0xa8ddb5, 0x7bccc4, 0x43a2ca, 0x0868ac}},
    {"GnBu", 7, {0xf0f9e8, 0xccebc5, 0xa8ddb5, 0x7bccc4, 0x4eb3d3, 0x2b8cbe, 0x08589e}},
    {"GnBu", 8, {0xf7fcf0, 0xe0f3db, 0xccebc5, 0xa8ddb5, 0x7bccc4, 0x4eb3d3, 0x2b8cbe, 0x08589e}},
    {"GnBu", 9, {0xf7fcf0, 0xe0f3db, 0xccebc5, 0xa8ddb5, 0x7bccc4, 0x4eb3d3, 0x2b8cbe, 0x0868ac, 0x084081}},
    {"Greens", 3, {0xe5f5e0, 0xa1d99b, 0x31a354}},
    {"Greens", 4, {0xedf8e9, 0xbae4b3, 0x74c476, 0x238b45}},
    {"Greens", 5, {0xedf8e9, 0xbae4b3, 0x74c476, 0x31a354, 0x006d2c}},
    {"Greens", 6, {0xedf8e9, 0xc7e9c0, 0xa1d99b, 0x74c476, 0x31a354, 0x006d2c}},
    {"Greens", 7, {0xedf8e9, 0xc7e9c0, 0xa1d99b, 0x74c476, 0x41ab5d, 0x238b45, 0x005a32}},
    {"Greens", 8, {0xf7fcf5, 0xe5f5e0, 0xc7e9c0, 0xa1d99b, 0x74c476, 0x41ab5d, 0x238b45, 0x005a32}},
    {"Greens", 9, {0xf7fcf5, 0xe5f5e0, 0xc7e9c0, 0xa1d99b, 0x74c476, 0x41ab5d, 0x238b45, 0x006d2c, 0x00441b}},
    {"Greys", 3, {0xf0f0f0, 0xbdbdbd, 0x636363}},
    {"Greys", 4, {0xf7f7f7, 0xcccccc, 0x969696, 0x525252}},
    {"Greys", 5, {0xf7f7f7, 0xcccccc, 0x969696, 0x636363, 0x252525}},
    {"Greys", 6, {0xf7f7f7, 0xd9d9d9, 0xbdbdbd, 0x969696, 0x636363, 0x252525}},
    {"Greys", 7, {0xf7f7f7, 0xd9d9d9, 0xbdbdbd, 0x969696, 0x737373, 0x525252, 0x252525}},
    {"Greys", 8, {0xffffff, 0xf0f0f0, 0xd9d9d9, 0xbdbdbd, 0x969696, 0x737373, 0x525252, 0x252525}},
    {"Greys", 9, {0xffffff, 0xf0f0f0, 0xd9d9d9, 0xbdbdbd, 0x969696, 0x737373, 0x525252, 0x252525, 0x000000}},
    {"OrRd", 3, {0xfee8c8, 0xfdbb84, 0xe34a33}},
    {"OrRd", 4, {0xfef0d9, 0xfdcc8a, 0xfc8d59, 0xd7301f}},
    {"OrRd", 5, {0xfef0d9, 0xfdcc8a, 0xfc8d59, 0xe34a33, 0xb30000}},
    {"OrRd", 6, {0xfef0d9, 0xfdd49e, 0xfdbb84, 0xfc8d59, 0xe34a33, 0xb30000}},
    {"OrRd", 7, {0xfef0d9, 0xfdd49e, 0xfdbb84, 0xfc8d59, 0xef6548, 0xd7301f, 0x990000}},
    {"OrRd", 8, {0xfff7ec, 0xfee8c8, 0xfdd49e, 0xfdbb84, 0xfc8d59, 0xef6548, 0xd7301f, 0x990000}},
    {"OrRd", 9, {0xfff7ec, 0xfee8c8, 0xfdd49e, 0xfdbb84, 0xfc8d59, 0xef6548, 0xd7301f, 0xb30000, 0x7f0000}},
    {"Oranges", 3, {0xfee6ce, 0xfdae6b, 0xe6550d}},
    {"Oranges", 4, {0xfeedde, 0xfdbe85, 0xfd8d3c, 0xd94701}},
    {"Oranges", 5, {0xfeedde, 0xfdbe85, 0xfd8d3c, 0xe6550d, 0xa63603}},
    {"Oranges", 6, {0xfeedde, 0xfdd0a2, 0xfdae6b, 0xfd8d3c, 0xe6550d, 0xa63603}},
    {"Oranges", 7, {0xfeedde, 0xfdd0a2, 0xfdae6b, 0xfd8d3c, 0xf16913, 0xd94801, 0x8c2d04}},
    {"Oranges", 8, {0xfff5eb, 0xfee6ce, 0xfdd0a2, 0xfdae6b, 0xfd8d3c, 0xf16913, 0xd94801, 0x8c2d04}},
    {"Oranges", 9, {0xfff5eb, 0xfee6ce, 0xfdd0a2, 0xfdae6b, 0xfd8d3c, 0xf16913, 0xd94801, 0xa63603, 0x7f2704}},
    {"PuBu", 3, {0xece7f2, 0xa6bddb, 0x2b8cbe}},
    {"PuBu", 4, {0xf1eef6, 0xbdc9e1, 0x74a9cf, 0x0570b0}},
    {"PuBu", 5, {0xf1eef6, 0xbdc9e1, 0x74a9cf, 0x2b8cbe, 0x045a8d}},
    {"PuBu", 6, {0xf1eef6, 0xd0d1e6, 0xa6bddb, 0x74a9cf, 0x2b8cbe, 0x045a8d}},
    {"PuBu", 7, {0xf1eef6, 0xd0d1e6, 0xa6bddb, 0x74a9cf, 0x3690c0, 0x0570b0, 0x034e7b}},
    {"PuBu", 8, {0xfff7fb, 0xece7f2, 0xd0d1e6, 0xa6bddb, 0x74a9cf, 0x3690c0, 0x0570b0, 0x034e7b}},
    {"PuBu", 9, {0xfff7fb, 0xece7f2, 0xd0d1e6, 0xa6bddb, 0x74a9cf, 0x3690c0, 0x0570b0, 0x045a8d, 0x023858}},
    {"PuBuGn", 3, {0xece2f0, 0xa6bddb, 0x1c9099}},
    {"PuBuGn", 4, {0xf6eff7, 0xbdc9e1, 0x67a9cf, 0x02818a}},
    {"PuBuGn", 5, {0xf6eff7, 0xbdc9e1, 0x67a9cf, 0x1c9099, 0x016c59}},
    {"PuBuGn", 6, {0xf6eff7, 0xd0d1e6, 0xa6bddb, 0x67a9cf, 0x1c9099, 0x016c59}},
    {"PuBuGn", 7, {0xf6eff7, 0xd0d1e6, 0xa6bddb, 0x67a9cf, 0x3690c0, 0x02818a, 0x016450}},
    {"PuBuGn", 8, {0xfff7fb, 0xece2f0, 0xd0d1e6, 0xa6bddb, 0x67a9cf, 0x3690c0, 0x02818a, 0x016450}},
    {"PuBuGn", 9, {0xfff7fb, 0xece2f0, 0xd0d1e6, 0xa6bddb, 0x67a9cf, 0x3690c0, 0x02818a, 0x016c59, 0x014636}},
    {"PuRd", 3, {0xe7e1ef, 0xc994c7, 0xdd1c77}},
    {"PuRd", 4, {0xf1eef6, 0xd7b5d8, 0xdf65b0, 0xce1256}},
    {"PuRd", 5, {0xf1eef6, 0xd7b5d8, 0xdf65b0, 0xdd1c77, 0x980043}},
    {"PuRd", 6, {0xf1eef6, 0xd4b9da, 0xc994c7, 0xdf65b0, 0xdd1c77, 0x980043}},
    {"PuRd", 7, {0xf1eef6, 0xd4b9da, 0xc994c7, 0xdf65b0, 0xe7298a, 0xce1256, 0x91003f}},
    {"PuRd", 8, {0xf7f4f9, 0xe7e1ef, 0xd4b9da, 0xc994c7, 0xdf65b0, 0xe7298a, 0xce1256, 0x91003f}},
    {"PuRd", 9, {0xf7f4f9, 0xe7e1ef, 0xd4b9da, 0xc994c7, 0xdf65b0, 0xe7298a, 0xce1256, 0x980043, 0x67001f}},
    {"Purples", 3, {0xefedf5, 0xbcbddc, 0x756bb1}},
    {"Purples", 4, {0xf2f0f7, 0xcbc9e2, 0x9e9ac8, 0x6a51a3}},
    {"Purples", 5, {0xf2f0f7, 0xcbc9e2, 0x9e9ac8, 0x756bb1, 0x54278f}},
    {"Purples", 6, {0xf2f0f7, 0xdadaeb, 0xbcbddc, 0x9e9ac8, 0x756bb1, 0x54278f}},
    {"Purples", 7, {0xf2f0f7, 0xdadaeb, 0xbcbddc, 0x9e9ac8, 0x807dba, 0x6a51a3, 0x4a1486}},
    {"Purples", 8, {0xfcfbfd, 0xefedf5, 0xdadaeb, 0xbcbddc, 0x9e9ac8, 0x807dba, 0x6a51a3, 0x4a1486}},
    {"Purples", 9, {0xfcfbfd, 0xefedf5, 0xdadaeb, 0xbcbddc, 0x9e9ac8, 0x807dba, 0x6a51a3, 0x54278f, 0x3f007d}},
    {"RdPu", 3, {0xfde0dd, 0xfa9fb5, 0xc51b8a}},
    {"RdPu", 4, {0xfeebe2, 0xfbb4b9, 0xf768a1, 0xae017e}},
    {"RdPu", 5, {0xfeebe2, 0xfbb4b9, 0xf768a1, 0xc51b8a, 0x7a0177}},
    {"RdPu", 6, {0xfeebe2, 0xfcc5c0, 0xfa9fb5, 0xf768a1, 0xc51b8a, 0x7a0177}},
    {"RdPu", 7, {0xfeebe2, 0xfcc5c0, 0xfa9fb5, 0xf768a1, 0xdd3497, 0xae017e, 0x7a0177}},
    {"RdPu", 8, {0xfff7f3, 0xfde0dd, 0xfcc5c0, 0xfa9fb5, 0xf768a1, 0xdd3497, 0xae017e, 0x7a0177}},
    {"RdPu", 9, {0xfff7f3, 0xfde0dd, 0xfcc5c0, 0xfa9fb5, 0xf768a1, 0xdd3497, 0xae017e, 0x7a0177, 0x49006a}},
    {"Reds", 3, {0xfee0d2, 0xfc9272, 0xde2d26}},
    {"Reds", 4, {0xfee5d9, 0xfcae91, 0xfb6a4a, 0xcb181d}},
    {"Reds", 5, {0xfee5d9, 0xfcae91, 0xfb6a4a, 0xde2d26, 0xa50f15}},
    {"Reds", 6, {0xfee5d9, 0xfcbba1, 0xfc9272, 0xfb6a4a, 0xde2d26, 0xa50f15}},
    {"Reds", 7, {0xfee5d9, 0xfcbba1, 0xfc9272, 0xfb6a4a, 0xef3b2c, 0xcb181d, 0x99000d}},
    {"Reds", 8, {0xfff5f0, 0xfee0d2, 0xfcbba1, 0xfc9272, 0xfb6a4a, 0xef3b2c, 0xcb181d, 0x99000d}},
    {"Reds", 9, {0xfff5f0, 0xfee0d2, 0xfcbba1, 0xfc9272, 0xfb6a4a, 0xef3b2c, 0xcb181d, 0xa50f15, 0x67000d}},
    {"YlGn", 3, {0xf7fcb9, 0xaddd8e, 0x31a354}},
    {"YlGn", 4, {0xffffcc, 0xc2e699, 0x78c679, 0x238443}},
    {"YlGn", 5, {0xffffcc, 0xc2e699, 0x78c679, 0x31a354, 0x006837}},
    {"YlGn", 6, {0xffffcc, 0xd9f0a3, 0xaddd8e, 0x78c679, 0x31a354, 0x006837}},
    {"YlGn", 7, {0xffffcc, 0xd9f0a3, 0xaddd8e, 0x78c679, 0x41ab5d, 0x238443, 0x005a32}},
    {"YlGn", 8, {0xffffe5, 0xf7fcb9, 0xd9f0a3, 0xaddd8e, 0x78c679, 0x41ab5d, 0x238443, 0x005a32}},
    {"YlGn", 9, {0xffffe5, 0xf7fcb9, 0xd9f0a3, 0xaddd8e, 0x78c679, 0x41ab5d, 0x238443, 0x006837, 0x004529}},
    {"YlGnBu", 3, {0xedf8b1, 0x7fcdbb, 0x2c7fb8}},
    {"YlGnBu", 4, {0xffffcc, 0xa1dab4, 0x41b6c4, 0x225ea8}},
    {"YlGnBu", 5, {0xffffcc, 0xa1dab4, 0x41b6c4, 0x2c7fb8, 0x253494}},
    {"YlGnBu", 6, {0xffffcc, 0xc7e9b4, 0x7fcdbb, 0x41b6c4, 0x2c7fb8, 0x253494}},
    {"YlGnBu", 7, {0xffffcc, 0xc7e9b4, 0x7fcdbb, 0x41b6c4, 0x1d91c0, 0x225ea8, 0x0c2c84}},
    {"YlGnBu", 8, {0xffffd9, 0xedf8b1, 0xc7e9b4, 0x7fcdbb, 0x41b6c4, 0x1d91c0, 0x225ea8, 0x0c2c84}},
    {"YlGnBu", 9, {0xffffd9, 0xedf8b1, 0xc7e9b4, 0x7fcdbb, 0x41b6c4, 0x1d91c0, 0x225ea8, 0x253494, 0x081d58}},
    {"YlOrBr", 3, {0xfff7bc, 0xfec44f, 0xd95f0e}},
    {"YlOrBr", 4, {0xffffd4, 0xfed98e, 0xfe9929, 0xcc4c02}},
    {"YlOrBr", 5, {0xffffd4, 0xfed98e, 0xfe9929, 0xd95f0e, 0x993404}},
    {"YlOrBr", 6, {0xffffd4, 0xfee391, 0xfec44f, 0xfe9929, 0xd95f0e, 0x993404}},
    {"YlOrBr", 7, {0xffffd4, 0xfee391, 0xfec44f, 0xfe9929, 0xec7014, 0xcc4c02, 0x8c2d04}},
    {"YlOrBr", 8, {0xffffe5, 0xfff7bc, 0xfee391, 0xfec44f, 0xfe9929, 0xec7014, 0xcc4c02, 0x8c2d04}},
    {"YlOrBr", 9, {0xffffe5, 0xfff7bc, 0xfee391, 0xfec44f, 0xfe9929, 0xec7014, 0xcc4c02, 0x993404, 0x662506}},
    {"YlOrRd", 3, {0xffeda0, 0xfeb24c, 0xf03b20}},
    {"YlOrRd", 4, {0xffffb2, 0xfecc5c, 0xfd8d3c, 0xe31a1c}},
    {"YlOrRd", 5, {0xffffb2, 0xfecc5c, 0xfd8d3c, 0xf03b20, 0xbd0026}},
    {"YlOrRd", 6, {0xffffb2, 0xfed976, 0xfeb24c, 0xfd8d3c, 0xf03b20, 0xbd0026}},
    {"YlOrRd", 7, {0xffffb2, 0xfed976, 0xfeb24c, 0xfd8d3c, 0xfc4e2a, 0xe31a1c, 0xb10026}},
    {"YlOrRd", 8, {0xffffcc, 0xffeda0, 0xfed976, 0xfeb24c, 0xfd8d3c, 0xfc4e2a, 0xe31a1c, 0xb10026}},
    {"YlOrRd", 9, {0xffffcc, 0xffeda0, 0xfed976, 0xfeb24c, 0xfd8d3c, 0xfc4e2a, 0xe31a1c, 0xbd0026, 0x800026}},
    {"BrBG", 3, {0xd8b365, 0xf5f5f5, 0x5ab4ac}},
    {"BrBG", 4, {0xa6611a, 0xdfc27d, 0x80cdc1, 0x018571}},
    {"BrBG", 5, {0xa6611a, 0xdfc27d, 0xf5f5f5, 0x80cdc1, 0x018571}},
    {"BrBG", 6, {0x8c510a, 0xd8b365, 0xf6e8c3, 0xc7eae5, 0x5ab4ac, 0x01665e}},
    {"BrBG", 7, {0x8c510a, 0xd8b365, 0xf6e8c3, 0xf5f5f5, 0xc7eae5, 0x5ab4ac, 0x01665e}},
    {"BrBG", 8, {0x8c510a, 0xbf812d, 0xdfc27d, 0xf6e8c3, 0xc7eae5, 0x80cdc1, 0x35978f, 0x01665e}},
    {"BrBG", 9, {0x8c510a, 0xbf812d, 0xdfc27d, 0xf6e8c3, 0xf5f5f5, 0xc7eae5, 0x80cdc1, 0x35978f, 0x01665e}},
    {"PRGn", 3, {0xaf8dc3, 0xf7f7f7, 0x7fbf7b}},
    {"PRGn", 4, {0x7b3294, 0xc2a5cf, 0xa6dba0, 0x008837}},
    {"PRGn", 5, {0x7b3294, 0xc2a5cf, 0xf7f7f7, 0xa6dba0, 0x008837}},
    {"PRGn", 6, {0x762a83, 0xaf8dc3, 0xe7d4e8, 0xd9f0d3, 0x7fbf7b, 0x1b7837}},
    {"PRGn", 7, {0x762a83, 0xaf8dc3, 0xe7d4e8, 0xf7f7f7, 0xd9f0d3, 0x7fbf7b, 0x1b7837}},
    {"PRGn", 8, {0x762a83, 0x9970ab, 0xc2a5cf, 0xe7d4e8, 0xd9f0d3, 0xa6dba0, 0x5aae61, 0x1b7837}},
    {"PRGn", 9, {0x762a83, 0x9970ab, 0xc2a5cf, 0xe7d4e8, 0xf7f7f7, 0xd9f0d3, 0xa6dba0, 0x5aae61, 0x1b7837}},
    {"PiYG", 3, {0xe9a3c9, 0xf7f7f7, 0xa1d76a}},
    {"PiYG", 4, {0xd01c8b, 0xf1b6da, 0xb8e186, 0x4dac26}},
    {"PiYG", 5, {0xd01c8b, 0xf1b6da, 0xf7f7f7, 0xb8e186, 0x4dac26}},
    {"PiYG", 6, {0xc51b7d, 0xe9a3c9, 0xfde0ef, 0xe6f5d0, 0xa1d76a, 0x4d9221}},
    {"PiYG", 7, {0xc51b7d, 0xe9a3c9, 0xfde0ef, 0xf7f7f7, 0xe6f5d0, 0xa1d76a, 0x4d9221}},
    {"PiYG", 8, {0xc51b7d, 0xde77ae, 0xf1b6da, 0xfde0ef, 0xe6f5d0, 0xb8e186, 0x7fbc41, 0x4d9221}},
    {"PiYG", 9, {0xc51b7d, 0xde77ae, 0xf1b6da, 0xfde0ef, 0xf7f7f7, 0xe6f5d0, 0xb8e186, 0x7fbc41, 0x4d9221}},
    {"PuOr", 3, {0xf1a340, 0xf7f7f7, 0x998ec3}},
    {"PuOr", 4, {0xe66101, 0xfdb863, 0xb2abd2, 0x5e3c99}},
    {"PuOr", 5, {0xe66101, 0xfdb863, 0xf7f7f7, 0xb2abd2, 0x5e3c99}},
    {"PuOr", 6, {0xb35806, 0xf1a340, 0xfee0b6, 0xd8daeb, 0x998ec3, 0x542788}},
    {"PuOr", 7, {0xb35806, 0xf1a340, 0xfee0b6, 0xf7f7f7, 0xd8daeb, 0x998ec3, 0x542788}},
    {"PuOr", 8, {0xb35806, 0xe08214, 0xfdb863, 0xfee0b6, 0xd8daeb, 0xb2abd2, 0x8073ac, 0x542788}},
    {"PuOr", 9, {0xb35806, 0xe08214, 0xfdb863, 0xfee0b6, 0xf7f7f7, 0xd8daeb, 0xb2abd2, 0x8073ac, 0x542788}},
    {"RdBu", 3, {0xef8a62, 0xf7f7f7, 0x67a9cf}},
    {"RdBu", 4, {0xca0020, 0xf4a582, 0x92c5de, 0x0571b0}},
    {"RdBu", 5, {0xca0020, 0xf4a582, 0xf7f7f7, 0x92c5de, 0x0571b0}},
    {"RdBu", 6, {0xb2182b, 0xef8a62, 0xfddbc7, 0xd1e5f0, 0x67a9cf, 0x2166ac}},
    {"RdBu", 7, {0xb2182b, 0xef8a62, 0xfddbc7, 0xf7f7f7, 0xd1e5f0, 0x67a9cf, 0x2166ac}},
    {"RdBu", 8, {0xb2182b, 0xd6604d, 0xf4a582, 0xfddbc7, 0xd1e5f0, 0x92c5de, 0x4393c3, 0x2166ac}},
    {"RdBu", 9, {0xb2182b, 0xd6604d, 0xf4a582, 0xfddbc7, 0xf7f7f7, 0xd1e5f0, 0x92c5de, 0x4393c3, 0x2166ac}},
    {"RdGy", 3, {0xef8a62, 0xffffff, 0x999999}},
    {"RdGy", 4, {0xca0020, 0xf4a582, 0xbababa, 0x404040}},
    {"RdGy", 5, {0xca0020, 0xf4a582, 0xffffff, 0xbababa, 0x404040}},
    {"RdGy", 6, {0xb2182b, 0xef8a62, 0xfddbc7, 0xe0e0e0, 0x999999, 0x4d4d4d}},
    {"RdGy", 7, {0xb2182b, 0xef8a62, 0xfddbc7, 0xffffff, 0xe0e0e0, 0x999999, 0x4d4d4d}},
    {"RdGy", 8, {0xb2182b, 0xd6604d, 0xf4a582, 0xfddbc7, 0xe0e0e0, 0xbababa, 0x878787, 0x4d4d4d}},
    {"RdGy", 9, {0xb2182b, 0xd6604d, 0xf4a582, 0xfddbc7, 0xffffff, 0xe0e0e0, 0xbababa, 0x878787, 0x4d4d4d}},
    {"RdYlBu", 3, {0xfc8d59, 0xffffbf, 0x91bfdb}},
    {"RdYlBu", 4, {0xd7191c, 0xfdae61, 0xabd9e9, 0x2c7bb6}},
    {"RdYlBu", 5, {0xd7191c, 0xfdae61, 0xffffbf, 0xabd9e9, 0x2c7bb6}},
    {"RdYlBu", 6, {0xd73027, 0xfc8d59, 0xfee090, 0xe0f3f8, 0x91bfdb, 0x4575b4}},
    {"RdYlBu", 7, {0xd73027, 0xfc8d59, 0xfee090, 0xffffbf, 0xe0f3f8, 0x91bfdb, 0x4575b4}},
    {"RdYlBu", 8, {0xd73027, 0xf46d43, 0xfdae61, 0xfee090, 0xe0f3f8, 0xabd9e9, 0x74add1, 0x4575b4}},
    {"RdYlBu", 9, {0xd73027, 0xf46d43, 0xfdae61, 0xfee090, 0xffffbf, 0xe0f3f8, 0xabd9e9, 0x74add1, 0x4575b4}},
    {"RdYlGn", 3, {0xfc8d59, 0xffffbf, 0x91cf60}},
    {"RdYlGn", 4, {0xd7191c, 0xfdae61, 0xa6d96a, 0x1a9641}},
    {"RdYlGn", 5, {0xd7191c, 0xfdae61, 0xffffbf, 0xa6d96a, 0x1a9641}},
    {"RdYlGn", 6, {0xd73027, 0xfc8d59, 0xfee08b, 0xd9ef8b, 0x91cf60, 0x1a9850}},
    {"RdYlGn", 7, {0xd73027, 0xfc8d59, 0xfee08b, 0xffffbf, 0xd9ef8b, 0x91cf60, 0x1a9850}},
    {"RdYlGn", 8, {0xd73027, 0xf46d43, 0xfdae61, 0xfee08b, 0xd9ef8b, 0xa6d96a, 0x66bd63, 0x1a9850}},
    {"RdYlGn", 9, {0xd73027, 0xf46d43, 0xfdae61, 0xfee08b, 0xffffbf, 0xd9ef8b, 0xa6d96a, 0x66bd63, 0x1a9850}},
    {"Spectral", 3, {0xfc8d59, 0xffffbf, 0x99d594}},
    {"Spectral", 4, {0xd7191c, 0xfdae61, 0xabdda4, 0x2b83ba}},
    {"Spectral", 5, {0xd7191c, 0xfdae61, 0xffffbf, 0xabdda4, 0x2b83ba}},
    {"Spectral", 6, {0xd53e4f, 0xfc8d59, 0xfee08b, 0xe6f598, 0x99d594, 0x3288bd}},
    {"Spectral", 7, {0xd53e4f, 0xfc8d59, 0xfee08b, 0xffffbf, 0xe6f598, 0x99d594, 0x3288bd}},
    {"Spectral", 8, {0xd53e4f, 0xf46d43, 0xfdae61, 0xfee08b, 0xe6f598, 0xabdda4, 0x66c2a5, 0x3288bd}},
    {"Spectral", 9, {0xd53e4f, 0xf46d43, 0xfdae61, 0xfee08b, 0xffffbf, 0xe6f598, 0xabdda4, 0x66c2a5, 0x3288bd}},
};

}  // namespace odflow::colorbrewer
