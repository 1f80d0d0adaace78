#pragma once

#include "huffman/correlate.hpp"
#include "huffman/error.hpp"
#include "huffman/families.hpp"
#include "huffman/fibpoly.hpp"
#include "huffman/numeric.hpp"
#include "huffman/roots.hpp"
#include "huffman/spectral.hpp"
