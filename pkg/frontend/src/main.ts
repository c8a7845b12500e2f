/** Browser bootstrap: builds the session from URL parameters and mounts it. */

import { ReviewApi, Smell } from './api.js';
import { mountApp } from './app.js';
import { ReviewSession } from './session.js';

function param(name: string): string | null {
  return new URLSearchParams(window.location.search).get(name);
}

const serverUrl = param('server') ?? window.location.origin;
const reviewerId =
  param('reviewer') ?? window.localStorage.getItem('reviewer_id') ?? `reviewer-${Date.now() % 10000}`;
window.localStorage.setItem('reviewer_id', reviewerId);
const smellFilter = (param('smell') as Smell | null) ?? undefined;

const session = new ReviewSession(new ReviewApi(serverUrl), reviewerId, smellFilter);
mountApp(document.getElementById('app') as HTMLElement, session);
