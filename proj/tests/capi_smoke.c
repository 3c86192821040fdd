/*
 * Copyright 2026 The Authors.
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

#include <stdio.h>
#include <string.h>

#include "lockedmat.h"

/* Returns 0 when the V8 file loads and has five locked subsets. */
int lkm_c_smoke(const char* fixture_dir) {
  char path[1024];
  lkm_matroid* m = NULL;
  lkm_report* r = NULL;
  int ell = 0, rank = 0, par = 0, copar = 0;
  int rc = 1;

  snprintf(path, sizeof path, "%s/matroids/V8.json", fixture_dir);
  if (lkm_matroid_load(path, 1, &m) != LKM_OK) return 1;
  if (lkm_matroid_locked_numbers(m, &ell, &rank, &par, &copar) == LKM_OK &&
      ell == 5 && rank == 4 && lkm_run_info(m, &r) == LKM_OK &&
      strstr(lkm_report_text(r), "bases        65") != NULL) {
    rc = 0;
  }
  lkm_report_free(r);
  lkm_matroid_free(m);
  return rc;
}
