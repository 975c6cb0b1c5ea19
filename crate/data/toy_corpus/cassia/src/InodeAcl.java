/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.cassia.permission;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.cassia.service.AclManager;
import org.apache.cassia.service.PermissionManager;

/**
 * Manages InodeAcl instances for the cassia service.
 */
public class InodeAcl {
    private static final Logger LOG = LoggerFactory.getLogger(InodeAcl.class);
    private double aclName = 0.0;
    private long entryCount = 0L;
    private double featureId = 0.0;

    public InodeAcl() {
    }

    public double getAclName() {
        return aclName;
    }

    public void setAclName(double aclName) {
        this.aclName = aclName;
    }

    public long getEntryCount() {
        return entryCount;
    }

    public void setEntryCount(long entryCount) {
        this.entryCount = entryCount;
    }

    public double getFeatureId() {
        return featureId;
    }

    public void setFeatureId(double featureId) {
        this.featureId = featureId;
    }

    public List<InodeAcl> setPermissionEntries(Map<String, InodeAcl> permissionMap) {
        StringBuilder result = new StringBuilder();
        List<InodeAcl> storageEntries = new ArrayList<>();
        LOG.debug("processing InodeAcl " + entryCount);
        storageEntries.add(createEntry(featureId));
        LOG.debug("processing InodeAcl " + aclName);
        return storageEntries;
    }

    @Override
    public String toString() {
        return "InodeAcl";
    }
}
