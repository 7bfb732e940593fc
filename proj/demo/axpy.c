/* Copyright 2026 The RAVE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Instrumented daxpy for a riscv64 guest with the V extension.
 *
 *   clang --target=riscv64-linux-gnu -march=rv64gcv -O2 -I../include axpy.c
 *
 * Run it under an instrumented emulator that writes rave-wire, then
 *   rave analyze --spec v1.0 --input axpy.trace --prv axpy
 */

#include <stdio.h>
#include <stdlib.h>

#include "rave/instrument.h"

enum { kRegion = 1000, kInit = 1, kAxpy = 2 };

static void axpy(long n, double a, const double* x, double* y) {
  for (long i = 0; i < n; ++i) y[i] += a * x[i];
}

int main(int argc, char** argv) {
  const long n = argc > 1 ? atol(argv[1]) : 4096;
  double* x = malloc(n * sizeof *x);
  double* y = malloc(n * sizeof *y);
  if (!x || !y) return 1;

  qemu_name_event(kRegion, "Code Region");
  qemu_name_value(kRegion, kInit, "Init");
  qemu_name_value(kRegion, kAxpy, "Axpy");

  qemu_event_and_value(kRegion, kInit);
  for (long i = 0; i < n; ++i) {
    x[i] = (double)i;
    y[i] = 1.0;
  }
  qemu_event_and_value(kRegion, kAxpy);
  axpy(n, 2.0, x, y);
  qemu_event_and_value(kRegion, 0);

  printf("%f\n", y[n - 1]);
  free(x);
  free(y);
  return 0;
}
