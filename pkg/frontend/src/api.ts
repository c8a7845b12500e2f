/**
 * Typed client for the review service JSON API (see docs/api.md in the
 * repository root). The UI talks to the backend exclusively through this
 * module.
 */

export type Smell = 'LONG_METHOD' | 'LARGE_CLASS' | 'FEATURE_ENVY';
export type Verdict = 'POSITIVE' | 'NEGATIVE';
export type QuestionKind = 'YES_NO' | 'ACTION';

export interface Question {
  id: string;
  text: string;
  kind: QuestionKind;
}

export interface Checklist {
  smell: Smell;
  questions: Question[];
}

export interface RefactoringAction {
  kind: 'EXTRACT_LINES' | 'EXTRACT_MEMBERS' | 'MOVE_METHOD';
  extract_lines: number[][] | null;
  extract_members: string[] | null;
  move_target: string | null;
}

export interface Sample {
  id: string;
  smell: Smell;
  origin: 'GENERATED' | 'ORIGINAL';
  group: string;
  label: string | null;
  code: string;
  context: Record<string, string>;
  metrics: { loc: number; nom: number | null; noa: number | null; nfdi: number | null };
  likelihood: string;
  provenance: Record<string, unknown>;
}

export interface NextSampleResponse {
  sample: Sample | null;
  checklist: Checklist | null;
}

export interface AnnotationPayload {
  sample_id: string;
  reviewer_id: string;
  verdict: Verdict;
  answers: Record<string, boolean>;
  action: RefactoringAction | null;
}

export type SubmitResult =
  | { accepted: true }
  | { accepted: false; reason: string };

export interface QueueStats {
  pending: Record<string, number>;
  annotated: Record<string, number>;
  leased: number;
  a_group: number;
}

export class ReviewApi {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, '') + path;
  }

  async nextSample(reviewerId: string, smell?: Smell): Promise<NextSampleResponse> {
    const params = new URLSearchParams({ reviewer_id: reviewerId });
    if (smell) params.set('smell', smell);
    const res = await fetch(this.url(`/api/next-sample?${params}`));
    if (!res.ok) throw new Error(`next-sample failed: HTTP ${res.status}`);
    return (await res.json()) as NextSampleResponse;
  }

  async submitAnnotation(payload: AnnotationPayload): Promise<SubmitResult> {
    const res = await fetch(this.url('/api/annotations'), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(payload),
    });
    if (res.status === 201) return { accepted: true };
    const body = (await res.json().catch(() => ({}))) as { reason?: string };
    return { accepted: false, reason: body.reason ?? `HTTP ${res.status}` };
  }

  async stats(): Promise<QueueStats> {
    const res = await fetch(this.url('/api/stats'));
    if (!res.ok) throw new Error(`stats failed: HTTP ${res.status}`);
    return (await res.json()) as QueueStats;
  }

  async exportRecords(): Promise<{ records: Record<string, unknown>[] }> {
    const res = await fetch(this.url('/api/export'));
    if (!res.ok) throw new Error(`export failed: HTTP ${res.status}`);
    return (await res.json()) as { records: Record<string, unknown>[] };
  }
}
