// Typed client for the gateway control API. The console holds no policy
// logic of its own: everything it displays comes back from these calls.

export interface Taxonomy {
  topCategories: string[];
  subcategories: Record<string, string>;
}

export interface ThirdParty {
  domain: string;
  isTracker: boolean;
  blocked: boolean;
}

export interface CurrentPage {
  url: string;
  categories: string[];
  source: string;
  verdict: 'block' | 'allow';
  reason: string;
  thirdParties: ThirdParty[];
}

export interface UrlPolicy {
  url: string;
  verdict: 'block' | 'allow' | null;
}

export interface CategoryRow {
  pagesTotal: number;
  pagesDistinct: number;
  pagesBlocked: number;
  adsTotal: number;
  adsBlocked: number;
  avgTrackersPerPage: number | null;
  stdTrackersPerPage: number | null;
  distinctTrackers: number;
  urlPolicyPages: number;
}

export interface Report {
  overall: {
    pagesTotal: number;
    pagesDistinct: number;
    pagesBlocked: number;
    pctPagesBlocked: number;
    adsTotal: number;
    adsBlocked: number;
    pctAdsBlocked: number;
    avgTrackers: number | null;
    stdTrackers: number | null;
    distinctTrackers: number;
    urlPolicyPages: number;
    topTrackers: { domain: string; pages: number; pctPages: number }[];
    topAdDomains: { domain: string; ads: number; pctAds: number }[];
  };
  perCategory: Record<string, CategoryRow>;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function parseError(resp: Response): Promise<never> {
  let code = 'invalid_body';
  let message = `HTTP ${resp.status}`;
  try {
    const body = await resp.json();
    if (body && typeof body.code === 'string') {
      code = body.code;
      message = body.message ?? message;
    }
  } catch {
    // non-JSON error body; keep defaults
  }
  throw new ApiError(resp.status, code, message);
}

export class ApiClient {
  constructor(readonly base: string = '') {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { 'Content-Type': 'application/json' };
      init.body = JSON.stringify(body);
    }
    const resp = await fetch(this.base + path, init);
    if (!resp.ok) {
      await parseError(resp);
    }
    return (await resp.json()) as T;
  }

  taxonomy(): Promise<Taxonomy> {
    return this.request('GET', '/taxonomy');
  }

  blockedCategories(): Promise<string[]> {
    return this.request('GET', '/policy/categories');
  }

  setBlockedCategories(categories: string[]): Promise<string[]> {
    return this.request('PUT', '/policy/categories', categories);
  }

  urlPolicy(url: string): Promise<UrlPolicy> {
    return this.request('GET', `/policy/urls/${encodeURIComponent(url)}`);
  }

  setUrlPolicy(url: string, verdict: 'block' | 'allow'): Promise<UrlPolicy> {
    return this.request('PUT', `/policy/urls/${encodeURIComponent(url)}`, { verdict });
  }

  clearUrlPolicy(url: string): Promise<UrlPolicy> {
    return this.request('DELETE', `/policy/urls/${encodeURIComponent(url)}`);
  }

  currentPage(client: string): Promise<CurrentPage> {
    return this.request('GET', `/page/current?client=${encodeURIComponent(client)}`);
  }

  recategorize(url: string, categories: string[]): Promise<unknown> {
    return this.request('POST', '/page/recategorize', { url, categories });
  }

  reportBrokenPage(url: string, note: string): Promise<unknown> {
    return this.request('POST', '/report/broken-page', { url, note });
  }

  metrics(): Promise<Report> {
    return this.request('GET', '/metrics');
  }
}
